#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genusdist/numeric.hpp"

namespace genusdist {

/// Dense univariate polynomial over exact rationals, constant term first.
/// The zero polynomial stores no coefficients; otherwise the leading
/// coefficient is nonzero. All arithmetic is exact.
class ExactPoly {
public:
    ExactPoly() = default;
    explicit ExactPoly(std::vector<Rat> coeffs);
    ExactPoly(std::initializer_list<Rat> coeffs);

    static ExactPoly constant(const Rat& c);
    static ExactPoly monomial(int degree, const Rat& coeff = Rat(1));

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of t^k; zero outside the stored range.
    Rat coeff(int k) const;
    const Rat& leading() const;
    std::span<const Rat> coeffs() const { return coeffs_; }

    ExactPoly operator-() const;
    ExactPoly& operator+=(const ExactPoly& o);
    ExactPoly& operator-=(const ExactPoly& o);
    friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
    friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
    friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);

    ExactPoly scaled(const Rat& k) const;
    ExactPoly pow(int e) const;
    ExactPoly derivative(int order = 1) const;
    Rat evaluate(const Rat& x) const;

    /// p(t - k), computed exactly.
    ExactPoly shifted_arg(const Int& k) const;

    bool operator==(const ExactPoly&) const = default;

    std::string to_string(std::string_view var = "t") const;

private:
    std::vector<Rat> coeffs_;
    void normalize();
};

/// Backward shift: p(t) -> p(t-1).
ExactPoly shift(const ExactPoly& p);

/// Interprets r as an operator polynomial in the backward shift and applies it:
/// sum_k [z^k] r * p(t-k).
ExactPoly apply_operator(const ExactPoly& r, const ExactPoly& p);

/// Hook content product H_{n,a}(t) = prod_{k=-a}^{n-a-1} (t+k), 0 <= a <= n-1.
/// Equals the a-fold backward shift of H_{n,0}(t) = t(t+1)...(t+n-1).
ExactPoly falling_factorial_H(int n, int a);

struct PolyDivMod {
    ExactPoly quotient;
    ExactPoly remainder;
};
PolyDivMod divmod(const ExactPoly& a, const ExactPoly& b);

/// Exact division; throws internal_error if the remainder is nonzero.
ExactPoly exact_div(const ExactPoly& a, const ExactPoly& b, const char* context);

/// Monic gcd.
ExactPoly poly_gcd(ExactPoly a, ExactPoly b);

}  // namespace genusdist
