#include "genusdist/genus.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "genusdist/characters.hpp"

namespace genusdist {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::constellation: return "constellation";
        case Family::digraph: return "digraph";
        case Family::bouquet: return "bouquet";
        case Family::dipole: return "dipole";
        case Family::fan: return "fan";
    }
    throw std::invalid_argument("unknown family");
}

Family family_from_name(std::string_view name) {
    if (name == "constellation") return Family::constellation;
    if (name == "digraph") return Family::digraph;
    if (name == "bouquet") return Family::bouquet;
    if (name == "dipole") return Family::dipole;
    if (name == "fan") return Family::fan;
    throw std::invalid_argument("unknown family \"" + std::string(name) + "\"");
}

Int GenusPolynomial::coeff(int g) const {
    if (g < 0 || g > degree()) return 0;
    return coeffs[g];
}

Int GenusPolynomial::total() const {
    Int t = 0;
    for (const Int& c : coeffs) t += c;
    return t;
}

std::string GenusPolynomial::pretty() const {
    std::ostringstream out;
    bool first = true;
    for (int g = 0; g <= degree(); ++g) {
        if (coeffs[g] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (g == 0) {
            out << coeffs[g].str();
        } else {
            if (coeffs[g] != 1) out << coeffs[g].str();
            out << "x";
            if (g >= 2) out << "^" << g;
        }
    }
    if (first) out << "0";
    return out.str();
}

PPoly p_poly(int m, int n, const Partition& lambda, PRoute route) {
    if (m < 2) throw std::domain_error("p_poly: m must be at least 2");
    if (n < 1) throw std::domain_error("p_poly: n must be positive");
    if (lambda.weight() != n) throw std::invalid_argument("p_poly: lambda must be a partition of n");

    ExactPoly acc;
    if (route == PRoute::character) {
        for (int a = 0; a < n; ++a) {
            const Int chi = mn_character(hook_partition(n, a), lambda);
            if (chi == 0) continue;
            const Rat weight = (a % 2 == 0) ? Rat(chi) : Rat(-chi);
            acc += falling_factorial_H(n, a).pow(m - 1).scaled(weight);
        }
    } else {
        const ExactPoly r = r_poly(n, lambda);
        acc = apply_operator(r, falling_factorial_H(n, 0).pow(m - 1));
    }

    const Rat prefactor(conjugacy_class_size(lambda), Int(n));
    ExactPoly p = acc * ExactPoly::monomial(lambda.length(), prefactor);

    if (p.degree() != (m - 1) * n + 1) {
        throw internal_error("p_poly: degree is not (m-1)n+1");
    }
    for (int k = 0; k < lambda.length(); ++k) {
        if (p.coeff(k) != 0) throw internal_error("p_poly: t^l(lambda) does not divide P");
    }
    return PPoly{std::move(p), m, n, lambda};
}

GenusPolynomial p_to_gamma(const PPoly& p) {
    const int top = (p.m - 1) * p.n + 1;
    std::vector<Int> coeffs;
    for (int e = 0; e <= p.poly.degree(); ++e) {
        const Rat c = p.poly.coeff(e);
        if (c == 0) continue;
        if ((top - e) % 2 != 0) {
            throw internal_error("p_to_gamma: exponent parity violates t^{(m-1)n+1} Gamma(1/t^2)");
        }
        const int g = (top - e) / 2;
        if (g < 0) throw internal_error("p_to_gamma: exponent above (m-1)n+1");
        const Int count = as_integer(c, "p_to_gamma coefficient");
        if (count <= 0) throw internal_error("p_to_gamma: non-positive genus count");
        if (static_cast<int>(coeffs.size()) <= g) coeffs.resize(g + 1, Int(0));
        coeffs[g] = count;
    }
    if (coeffs.empty() || coeffs[0] == 0) {
        throw internal_error("p_to_gamma: no genus-0 objects; formula is broken");
    }
    // Top genus bound floor(((m-1)n + 1 - l) / 2).
    const int bound = (top - p.lambda.length()) / 2;
    if (static_cast<int>(coeffs.size()) - 1 > bound) {
        throw internal_error("p_to_gamma: genus above the (m-1)n+1-l bound");
    }
    return GenusPolynomial{std::move(coeffs), Family::constellation, p.m, p.n, p.lambda};
}

GenusPolynomial gamma_constellation(int m, int n, const Partition& lambda, PRoute route) {
    return p_to_gamma(p_poly(m, n, lambda, route));
}

GenusPolynomial gamma_digraph(int n, const Partition& lambda) {
    GenusPolynomial g3 = gamma_constellation(3, n, lambda);
    Int scale_num = 1;
    for (int part : lambda.parts()) scale_num *= factorial(part);
    scale_num *= scale_num;
    for (const auto& [value, count] : lambda.multiplicities()) {
        (void)value;
        scale_num *= factorial(count);
    }
    const Rat scale(scale_num, factorial(n));
    for (Int& c : g3.coeffs) {
        c = as_integer(Rat(c) * scale, "gamma_digraph coefficient");
    }
    g3.family = Family::digraph;
    return g3;
}

GenusPolynomial bouquet_gamma(int n) {
    if (n < 1) throw std::domain_error("bouquet_gamma: n must be positive");
    GenusPolynomial g = gamma_digraph(n, Partition(std::vector<int>(n, 1)));
    g.family = Family::bouquet;
    return g;
}

GenusPolynomial dipole_gamma(int n) {
    if (n < 1) throw std::domain_error("dipole_gamma: n must be positive");
    GenusPolynomial g = gamma_digraph(n, Partition(std::vector<int>{n}));
    g.family = Family::dipole;
    return g;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

FanShape fan_decompose(const EulerianDigraph& d, int handle) {
    if (handle < 0 || handle >= d.vertex_count()) {
        throw std::invalid_argument("fan handle out of range");
    }
    const int n = d.half_degree(handle);
    if (n == 0) throw not_fan_error("handle has no edges");

    // Forest check on the remaining vertices: any loop, parallel pair or
    // cycle among them disqualifies the handle.
    std::vector<int> parent(d.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    for (int e = 0; e < d.edge_count(); ++e) {
        const auto [tail, head] = d.edge(e);
        if (tail == handle && head == handle) {
            throw not_fan_error("handle carries a self-loop; contraction shape undefined");
        }
        if (tail == handle || head == handle) continue;
        const int a = find_root(parent, tail);
        const int b = find_root(parent, head);
        if (a == b) throw not_fan_error("handle removal leaves a cycle, not a directed forest");
        parent[a] = b;
    }

    // Parts of lambda: per forest component, the number of edges into the
    // handle. Eulerian balance makes this equal the count out of the handle.
    std::vector<int> into_handle(d.vertex_count(), 0);
    for (int e = 0; e < d.edge_count(); ++e) {
        const auto [tail, head] = d.edge(e);
        if (head == handle) ++into_handle[find_root(parent, tail)];
    }
    std::vector<int> parts;
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (v == handle) continue;
        if (find_root(parent, v) == v && into_handle[v] > 0) parts.push_back(into_handle[v]);
    }
    std::sort(parts.rbegin(), parts.rend());
    Partition lambda(std::move(parts));
    if (lambda.weight() != n) {
        throw internal_error("fan_decompose: component in-edges do not sum to the handle degree");
    }
    return FanShape{n, std::move(lambda)};
}

GenusPolynomial fan_gamma(const EulerianDigraph& d, int handle) {
    const FanShape shape = fan_decompose(d, handle);
    GenusPolynomial base = gamma_digraph(shape.n, shape.lambda);

    // The contraction sends embeddings of d to embeddings of the one-black
    // digraph in constant proportion; the constant is pinned by total counts.
    const Rat c(d.total_embeddings(), base.total());
    if (c <= 0) throw internal_error("fan_gamma: non-positive scaling");
    for (Int& coeff : base.coeffs) {
        coeff = as_integer(Rat(coeff) * c, "fan_gamma coefficient");
    }
    base.family = Family::fan;
    return base;
}

}  // namespace genusdist
