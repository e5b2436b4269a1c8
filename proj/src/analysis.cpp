#include "genusdist/analysis.hpp"

#include <stdexcept>

#include "genusdist/characters.hpp"
#include "genusdist/sturm.hpp"

namespace genusdist {

LogConcavityReport is_log_concave(std::span<const Int> coeffs) {
    int first = 0;
    int last = static_cast<int>(coeffs.size()) - 1;
    while (first <= last && coeffs[first] == 0) ++first;
    while (last >= first && coeffs[last] == 0) --last;
    if (first > last) return {LogConcavity::not_applicable, -1};
    for (int k = first; k <= last; ++k) {
        if (coeffs[k] == 0) return {LogConcavity::not_applicable, -1};
        if (coeffs[k] < 0) throw std::invalid_argument("is_log_concave: negative entry");
    }
    for (int k = first + 1; k < last; ++k) {
        if (coeffs[k] * coeffs[k] < coeffs[k - 1] * coeffs[k + 1]) {
            return {LogConcavity::no, k};
        }
    }
    return {LogConcavity::yes, -1};
}

RealRootCertificate certify_real_rooted_nonpositive(const ExactPoly& p) {
    if (p.is_zero()) throw std::domain_error("certify: zero polynomial");
    RealRootCertificate cert;
    cert.degree = p.degree();
    if (p.degree() == 0) {
        cert.real_rooted = true;
        cert.all_roots_nonpositive = true;
        return cert;
    }
    const ExactPoly sf = square_free_part(p);
    cert.distinct_real_roots = sturm_count(sf, std::nullopt, std::nullopt);
    cert.real_rooted = cert.distinct_real_roots == sf.degree();

    bool nonneg_coeffs = true;
    for (const Rat& c : p.coeffs()) {
        if (c < 0) {
            nonneg_coeffs = false;
            break;
        }
    }
    // Non-negative coefficients force p(x) > 0 for x > 0.
    cert.all_roots_nonpositive =
        nonneg_coeffs || sturm_count(sf, Rat(0), std::nullopt) == 0;
    return cert;
}

RealRootCertificate certify_real_rooted_nonpositive(const GenusPolynomial& gamma) {
    std::vector<Rat> coeffs;
    coeffs.reserve(gamma.coeffs.size());
    for (const Int& c : gamma.coeffs) coeffs.emplace_back(c);
    return certify_real_rooted_nonpositive(ExactPoly(std::move(coeffs)));
}

namespace {

Rat harmonic(int n, int power) {
    Rat sum(0);
    for (int k = 1; k <= n; ++k) {
        Int kp = k;
        if (power == 2) kp *= k;
        sum += Rat(Int(1), kp);
    }
    return sum;
}

void require_moment_args(int m, int n, const Partition& lambda, const char* who) {
    if (m < 3) throw std::domain_error(std::string(who) + ": m must be at least 3");
    if (n < 1 || lambda.weight() != n) {
        throw std::invalid_argument(std::string(who) + ": lambda must be a partition of n");
    }
}

}  // namespace

Rat expected_X(int m, int n, const Partition& lambda) {
    require_moment_args(m, n, lambda, "expected_X");
    return Rat(lambda.length()) + Rat(m - 1) * harmonic(n, 1);
}

Rat variance_X(int m, int n, const Partition& lambda) {
    require_moment_args(m, n, lambda, "variance_X");
    Rat var = Rat(m - 1) * (harmonic(n, 1) - harmonic(n, 2));
    if (m == 3) {
        const ExactPoly r = r_poly(n, lambda);
        Rat correction(0);
        for (int k = 1; k <= n - 1; ++k) {
            const Int b = binomial(n - 1, k - 1);
            correction += r.coeff(k) / Rat(b * b);
        }
        var += Rat(2, Int(n) * n) * correction;
    }
    return var;
}

GammaMoments moments_from_gamma(const GenusPolynomial& gamma) {
    const Int total = gamma.total();
    if (total == 0) throw std::domain_error("moments_from_gamma: empty distribution");
    Rat mean(0), second(0);
    for (int g = 0; g <= gamma.degree(); ++g) {
        if (gamma.coeffs[g] == 0) continue;
        const Rat p(gamma.coeffs[g], total);
        mean += p * g;
        second += p * g * g;
    }
    GammaMoments mom;
    mom.mean_genus = mean;
    mom.var_genus = second - mean * mean;
    // X = (m-1)n + 1 - 2g; digraph-derived families sit at m = 3.
    const int top = (gamma.m - 1) * gamma.n + 1;
    mom.mean_x = Rat(top) - 2 * mom.mean_genus;
    mom.var_x = 4 * mom.var_genus;
    return mom;
}

AsymptoticParams asymptotic_params(int m, int n, const Partition& lambda) {
    require_moment_args(m, n, lambda, "asymptotic_params");
    const Dec log_n = boost::multiprecision::log(Dec(n));
    AsymptoticParams out;
    out.mu = (Dec(m - 1) * n - lambda.length()) / 2 - Dec(m - 1) / 2 * log_n;
    out.sigma_sq = Dec(m - 1) / 4 * log_n;
    return out;
}

MomentReport moment_report(int m, int n, const Partition& lambda, int digits) {
    MomentReport rep;
    rep.m = m;
    rep.n = n;
    rep.lambda = lambda;
    rep.digits = digits;
    rep.mean_x = expected_X(m, n, lambda);
    rep.var_x = variance_X(m, n, lambda);
    rep.mean_genus = (Rat((m - 1) * n + 1) - rep.mean_x) / 2;
    rep.var_genus = rep.var_x / 4;
    const AsymptoticParams ap = asymptotic_params(m, n, lambda);
    rep.mu = ap.mu;
    rep.sigma_sq = ap.sigma_sq;
    return rep;
}

AsymptoticGap asymptotic_gap_ncycle(int m, int n) {
    if (m < 3) throw std::domain_error("asymptotic_gap_ncycle: m must be at least 3");
    if (n < 2) throw std::domain_error("asymptotic_gap_ncycle: n must be at least 2");

    Dec h1(0), h2(0);
    for (int k = 1; k <= n; ++k) {
        const Dec kk(k);
        h1 += 1 / kk;
        h2 += 1 / (kk * kk);
    }
    const Dec log_n = boost::multiprecision::log(Dec(n));

    // lambda = [n]: l = 1 and every coefficient of R_{n,[n]} is 1.
    const Dec mean_genus = (Dec(m - 1) * n + 1 - 1 - Dec(m - 1) * h1) / 2;
    const Dec mu = (Dec(m - 1) * n - 1) / 2 - Dec(m - 1) / 2 * log_n;

    Dec var_x = Dec(m - 1) * (h1 - h2);
    if (m == 3) {
        Dec correction(0);
        Dec binom(1);  // binom(n-1, k-1), advanced multiplicatively
        for (int k = 1; k <= n - 1; ++k) {
            correction += 1 / (binom * binom);
            binom = binom * (n - k) / k;
        }
        var_x += 2 * correction / (Dec(n) * n);
    }
    const Dec var_genus = var_x / 4;
    const Dec sigma_sq = Dec(m - 1) / 4 * log_n;

    AsymptoticGap gap;
    gap.mean_gap = boost::multiprecision::abs(mean_genus - mu);
    gap.var_gap = boost::multiprecision::abs(var_genus - sigma_sq);
    return gap;
}

}  // namespace genusdist
