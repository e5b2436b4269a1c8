#include "genusdist/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace genusdist {

ExactPoly::ExactPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

ExactPoly::ExactPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { normalize(); }

void ExactPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactPoly ExactPoly::constant(const Rat& c) {
    ExactPoly p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

ExactPoly ExactPoly::monomial(int degree, const Rat& coeff) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be non-negative");
    ExactPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(degree + 1, Rat(0));
        p.coeffs_.back() = coeff;
    }
    return p;
}

Rat ExactPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[k];
}

const Rat& ExactPoly::leading() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

ExactPoly ExactPoly::operator-() const {
    ExactPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ExactPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.normalize();
    return r;
}

ExactPoly ExactPoly::scaled(const Rat& k) const {
    if (k == 0) return {};
    ExactPoly r = *this;
    for (auto& c : r.coeffs_) c *= k;
    return r;
}

ExactPoly ExactPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    ExactPoly r = constant(Rat(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

ExactPoly ExactPoly::derivative(int order) const {
    if (order < 0) throw std::invalid_argument("negative derivative order");
    ExactPoly r = *this;
    for (int pass = 0; pass < order; ++pass) {
        if (r.coeffs_.empty()) break;
        std::vector<Rat> d;
        d.reserve(r.coeffs_.size());
        for (std::size_t k = 1; k < r.coeffs_.size(); ++k) d.push_back(r.coeffs_[k] * Rat(Int(k)));
        r.coeffs_ = std::move(d);
        r.normalize();
    }
    return r;
}

Rat ExactPoly::evaluate(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ExactPoly ExactPoly::shifted_arg(const Int& k) const {
    // Horner in (t - k): acc <- acc*(t-k) + c_i from the top coefficient down.
    ExactPoly acc;
    const Rat kk(k);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        ExactPoly next;
        next.coeffs_.assign(acc.coeffs_.size() + 1, Rat(0));
        for (std::size_t i = 0; i < acc.coeffs_.size(); ++i) {
            next.coeffs_[i + 1] += acc.coeffs_[i];
            next.coeffs_[i] -= acc.coeffs_[i] * kk;
        }
        next.coeffs_[0] += *it;
        next.normalize();
        acc = std::move(next);
    }
    return acc;
}

std::string ExactPoly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat c = coeff(k);
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        const Rat mag = c > 0 ? c : Rat(-c);
        if (mag != 1 || k == 0) out << rat_to_string(mag);
        if (k >= 1) {
            out << var;
            if (k >= 2) out << "^" << k;
        }
    }
    return out.str();
}

ExactPoly shift(const ExactPoly& p) { return p.shifted_arg(1); }

ExactPoly apply_operator(const ExactPoly& r, const ExactPoly& p) {
    ExactPoly acc;
    for (int k = 0; k <= r.degree(); ++k) {
        const Rat c = r.coeff(k);
        if (c == 0) continue;
        acc += p.shifted_arg(k).scaled(c);
    }
    return acc;
}

ExactPoly falling_factorial_H(int n, int a) {
    if (n < 1) throw std::domain_error("falling_factorial_H: n must be positive");
    if (a < 0 || a > n - 1) throw std::domain_error("falling_factorial_H: a out of [0, n-1]");
    ExactPoly p = ExactPoly::constant(Rat(1));
    for (int k = -a; k <= n - a - 1; ++k) p = p * ExactPoly{Rat(k), Rat(1)};
    return p;
}

PolyDivMod divmod(const ExactPoly& a, const ExactPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    ExactPoly r = a;
    std::vector<Rat> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int k = r.degree() - b.degree();
        const Rat c = r.leading() / b.leading();
        q[k] = c;
        r -= b * ExactPoly::monomial(k, c);
    }
    return {ExactPoly(std::move(q)), std::move(r)};
}

ExactPoly exact_div(const ExactPoly& a, const ExactPoly& b, const char* context) {
    auto [quot, rem] = divmod(a, b);
    if (!rem.is_zero()) {
        throw internal_error(std::string(context) + ": division left remainder " + rem.to_string());
    }
    return quot;
}

ExactPoly poly_gcd(ExactPoly a, ExactPoly b) {
    while (!b.is_zero()) {
        ExactPoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rat(1) / a.leading());
}

}  // namespace genusdist
