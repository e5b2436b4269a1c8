#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "genusdist/digraph.hpp"
#include "genusdist/partition.hpp"
#include "genusdist/poly.hpp"

namespace genusdist {

enum class Family { constellation, digraph, bouquet, dipole, fan };
std::string_view family_name(Family f);
Family family_from_name(std::string_view name);

/// Genus distribution: coeffs[g] counts objects of genus g. Coefficients are
/// non-negative integers with a nonzero trailing entry.
struct GenusPolynomial {
    std::vector<Int> coeffs;
    Family family = Family::constellation;
    int m = 0;
    int n = 0;
    Partition lambda;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Int coeff(int g) const;
    Int total() const;  // value at x = 1

    /// "c0 + c1x + c2x^2 + ..." with unit coefficients suppressed.
    std::string pretty() const;
};

/// P(t) = t^{(m-1)n+1} Gamma(1/t^2) for the constellation family: nonzero
/// coefficients only at exponents of the same parity as (m-1)n+1, and t^l(lambda)
/// divides it.
struct PPoly {
    ExactPoly poly;
    int m = 0;
    int n = 0;
    Partition lambda;
};

/// Two algebraically equal but independently coded evaluation routes.
enum class PRoute { character, shift_operator };

/// P^{(m)}_{n,lambda}(t):
///   character route:  (|C(lambda)|/n) t^l sum_a (-1)^a H_{n,a}(t)^{m-1} chi^{[n-a,1^a]}_lambda
///                     with characters from the Murnaghan-Nakayama rule;
///   operator route:   (|C(lambda)|/n) t^l R_{n,lambda}(T) H_{n,0}(t)^{m-1}
///                     with T the backward shift and R from r_poly.
PPoly p_poly(int m, int n, const Partition& lambda, PRoute route = PRoute::shift_operator);

/// Reads the genus distribution out of a PPoly: [x^g]Gamma = [t^{(m-1)n+1-2g}]P.
/// Parity violations or negative/non-integer coefficients are internal errors.
GenusPolynomial p_to_gamma(const PPoly& p);

/// Genus distribution of identity factorizations into m+1 permutations, one
/// an n-cycle and one of cycle type lambda (one-face m-constellations).
GenusPolynomial gamma_constellation(int m, int n, const Partition& lambda,
                                    PRoute route = PRoute::shift_operator);

/// Genus distribution of the one-black-vertex bipartite Eulerian digraph:
/// (1/n!) (prod lambda_i!)^2 (prod m_i(lambda)!) * Gamma^{(3)}_{n,lambda}.
GenusPolynomial gamma_digraph(int n, const Partition& lambda);

GenusPolynomial bouquet_gamma(int n);  // = gamma_digraph(n, [1^n])
GenusPolynomial dipole_gamma(int n);   // = gamma_digraph(n, [n])

/// Genus distribution of an Eulerian fan: handle removal must leave a
/// directed forest. lambda collects the in-edge counts from each forest
/// component; the result is gamma_digraph(n, lambda) rescaled so its total
/// equals total_embeddings(d).
GenusPolynomial fan_gamma(const EulerianDigraph& d, int handle);

/// The fan decomposition by itself (used for diagnostics).
struct FanShape {
    int n = 0;           // half-degree of the handle
    Partition lambda;    // in-edge counts per forest component
};
FanShape fan_decompose(const EulerianDigraph& d, int handle);

}  // namespace genusdist
