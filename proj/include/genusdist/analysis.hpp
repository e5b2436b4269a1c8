#pragma once

#include <span>
#include <string>

#include "genusdist/genus.hpp"
#include "genusdist/numeric.hpp"
#include "genusdist/partition.hpp"
#include "genusdist/poly.hpp"

namespace genusdist {

enum class LogConcavity { yes, no, not_applicable };

/// a_k^2 >= a_{k-1} a_{k+1} on the positive range; interior zeros make the
/// notion inapplicable rather than true or false. Exact integer comparisons.
struct LogConcavityReport {
    LogConcavity verdict = LogConcavity::yes;
    int violation_index = -1;  // first violating k when verdict == no
};
LogConcavityReport is_log_concave(std::span<const Int> coeffs);

/// Exact real-rootedness certificate via Sturm chains on the square-free
/// part; no floating point anywhere. real_rooted holds iff the square-free
/// part has as many distinct real roots as its degree (multiplicities then
/// account for the rest); non-positivity is certified by a zero Sturm count
/// on (0, +inf), with an all-coefficients-non-negative fast path.
struct RealRootCertificate {
    bool real_rooted = false;
    bool all_roots_nonpositive = false;
    int degree = 0;
    int distinct_real_roots = 0;
};
RealRootCertificate certify_real_rooted_nonpositive(const ExactPoly& p);
RealRootCertificate certify_real_rooted_nonpositive(const GenusPolynomial& gamma);

/// X = (m-1)n + 1 - 2g for a uniform random element; E[X] = l(lambda) +
/// (m-1) H_n with H_n the harmonic number. Exact rational. Requires m >= 3.
Rat expected_X(int m, int n, const Partition& lambda);

/// Var[X]: (m-1) sum (1/k - 1/k^2) for m >= 4; for m = 3 an extra
/// 2 n^{-2} sum_k binom(n-1,k-1)^{-2} [z^k] R_{n,lambda}(z) appears.
Rat variance_X(int m, int n, const Partition& lambda);

/// Exact genus and X moments of the normalized coefficient distribution.
struct GammaMoments {
    Rat mean_genus, var_genus, mean_x, var_x;
};
GammaMoments moments_from_gamma(const GenusPolynomial& gamma);

/// mu_m = ((m-1)n - l(lambda))/2 - (m-1)/2 ln n and
/// sigma_m^2 = (m-1)/4 ln n, as high-precision decimals.
struct AsymptoticParams {
    Dec mu;
    Dec sigma_sq;
};
AsymptoticParams asymptotic_params(int m, int n, const Partition& lambda);

struct MomentReport {
    int m = 0, n = 0;
    Partition lambda;
    Rat mean_x, var_x, mean_genus, var_genus;
    Dec mu, sigma_sq;
    int digits = 50;
};
MomentReport moment_report(int m, int n, const Partition& lambda, int digits = 50);

/// Closed-form gaps |E[g] - mu_m| and |Var[g] - sigma_m^2| for lambda = [n],
/// evaluated at 100-digit precision (no enumeration; harmonic sums summed
/// directly in decimals, error far below any tolerance in use).
struct AsymptoticGap {
    Dec mean_gap;
    Dec var_gap;
};
AsymptoticGap asymptotic_gap_ncycle(int m, int n);

}  // namespace genusdist
