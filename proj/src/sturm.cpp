#include "genusdist/sturm.hpp"

#include <stdexcept>
#include <vector>

namespace genusdist {

namespace {

// Scales by a positive rational so coefficients become coprime integers.
// Positive scaling preserves every sign used by the Sturm chain.
ExactPoly primitive_positive(const ExactPoly& p) {
    if (p.is_zero()) return p;
    Int den_lcm = 1;
    for (const Rat& c : p.coeffs()) {
        const Int d = boost::multiprecision::denominator(c);
        den_lcm = boost::multiprecision::lcm(den_lcm, d);
    }
    Int num_gcd = 0;
    for (const Rat& c : p.coeffs()) {
        const Rat scaled = c * Rat(den_lcm);
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(scaled));
    }
    if (num_gcd == 0) num_gcd = 1;
    return p.scaled(Rat(den_lcm, num_gcd));
}

int sign_of(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int sign_at(const ExactPoly& p, const std::optional<Rat>& x, bool at_lower_infinity) {
    if (p.is_zero()) return 0;
    if (x) return sign_of(p.evaluate(*x));
    const int lead = sign_of(p.leading());
    if (!at_lower_infinity) return lead;
    return p.degree() % 2 == 0 ? lead : -lead;
}

int sign_variations(const std::vector<ExactPoly>& chain, const std::optional<Rat>& x,
                    bool at_lower_infinity) {
    int variations = 0;
    int prev = 0;
    for (const ExactPoly& p : chain) {
        const int s = sign_at(p, x, at_lower_infinity);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

}  // namespace

ExactPoly square_free_part(const ExactPoly& p) {
    if (p.is_zero()) throw std::domain_error("square_free_part of zero polynomial");
    if (p.degree() == 0) return ExactPoly::constant(Rat(1));
    const ExactPoly g = poly_gcd(p, p.derivative());
    ExactPoly sf = exact_div(p, g, "square_free_part");
    return sf.scaled(Rat(1) / sf.leading());
}

int sturm_count(const ExactPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    if (p.is_zero()) throw std::domain_error("sturm_count of zero polynomial");
    if (lo && hi && !(*lo < *hi)) return 0;

    ExactPoly sf = square_free_part(p);
    int count = 0;
    // Peel off roots sitting exactly on an endpoint, so the classical
    // V(lo) - V(hi) open-interval statement applies to what remains.
    if (hi && sf.evaluate(*hi) == 0) {
        ++count;  // hi itself belongs to (lo, hi]
        sf = exact_div(sf, ExactPoly{-*hi, Rat(1)}, "sturm endpoint root");
    }
    if (lo && sf.evaluate(*lo) == 0) {
        sf = exact_div(sf, ExactPoly{-*lo, Rat(1)}, "sturm endpoint root");
    }
    if (sf.degree() <= 0) return count;

    std::vector<ExactPoly> chain;
    chain.push_back(primitive_positive(sf));
    chain.push_back(primitive_positive(sf.derivative()));
    while (!chain.back().is_zero()) {
        ExactPoly rem = divmod(chain[chain.size() - 2], chain.back()).remainder;
        chain.push_back(primitive_positive(-rem));
    }
    chain.pop_back();

    const int at_lo = sign_variations(chain, lo, true);
    const int at_hi = sign_variations(chain, hi, false);
    return count + at_lo - at_hi;
}

}  // namespace genusdist
