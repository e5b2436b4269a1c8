#pragma once

#include <span>
#include <vector>

#include "genusdist/partition.hpp"
#include "genusdist/poly.hpp"

namespace genusdist {

/// Irreducible character chi^theta_mu of S_n by the Murnaghan-Nakayama rule
/// (recursive border-strip removal on beta-sets, largest part of mu first).
/// Memoized per process; safe under concurrent callers.
Int mn_character(const Partition& theta, const Partition& mu);

/// R_{n,lambda}(z) = (1/(1-z)) prod_j (1 - z^{lambda_j}), the generating
/// polynomial of hook characters: [z^a] R = (-1)^a chi^{[n-a,1^a]}_lambda.
/// Degree n-1, integer coefficients, constant term 1, top coefficient
/// (-1)^{l(lambda)-1}, and 1 is a root of multiplicity l(lambda)-1
/// (all verified internally).
ExactPoly r_poly(int n, const Partition& lambda);

/// chi^{[n-a,1^a]}_lambda read off from r_poly; an implementation path
/// independent of mn_character.
Int hook_character(int n, int a, const Partition& lambda);

/// The full vector (chi^{[n-a,1^a]}_lambda) for a = 0..n-1.
struct HookCharVector {
    int n = 0;
    Partition lambda;
    std::vector<Int> values;
};
HookCharVector hook_characters(int n, const Partition& lambda);

/// Number of k-tuples (s_1, ..., s_k) with s_i in C(mu_i) and s_1...s_k = id:
/// (1/n!) prod |C(mu_i)| sum_theta (f^theta)^{2-k} prod chi^theta_{mu_i}.
/// Accumulated over exact rationals; integrality asserted at the end.
Int frobenius_count(std::span<const Partition> cycle_types);

}  // namespace genusdist
