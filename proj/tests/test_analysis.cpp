#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "genusdist/analysis.hpp"
#include "genusdist/characters.hpp"

using namespace genusdist;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("is_log_concave") {
    const auto a = ints({2, 16, 6});
    CHECK(is_log_concave(a).verdict == LogConcavity::yes);
    const auto b = ints({1, 1, 2});
    const auto rb = is_log_concave(b);
    CHECK(rb.verdict == LogConcavity::no);
    CHECK(rb.violation_index == 1);
    const auto single = ints({7});
    CHECK(is_log_concave(single).verdict == LogConcavity::yes);
    const auto with_gap = ints({1, 0, 1});
    CHECK(is_log_concave(with_gap).verdict == LogConcavity::not_applicable);
    const auto padded = ints({0, 3, 4, 2, 0});
    CHECK(is_log_concave(padded).verdict == LogConcavity::yes);
}

TEST_CASE("real-rootedness certificates") {
    const auto two_two = certify_real_rooted_nonpositive(ExactPoly{Rat(2), Rat(2)});
    CHECK(two_two.real_rooted);
    CHECK(two_two.all_roots_nonpositive);

    const auto cyclo = certify_real_rooted_nonpositive(ExactPoly{Rat(1), Rat(1), Rat(1)});
    CHECK(!cyclo.real_rooted);

    const auto dip3 = certify_real_rooted_nonpositive(ExactPoly{Rat(12), Rat(96), Rat(36)});
    CHECK(dip3.real_rooted);
    CHECK(dip3.all_roots_nonpositive);

    const auto constant = certify_real_rooted_nonpositive(ExactPoly::constant(Rat(5)));
    CHECK(constant.real_rooted);
    CHECK(constant.all_roots_nonpositive);

    // positive root caught through the Sturm path
    const auto pos = certify_real_rooted_nonpositive(ExactPoly{Rat(-1), Rat(0), Rat(1)});
    CHECK(pos.real_rooted);
    CHECK(!pos.all_roots_nonpositive);

    // repeated roots: (x+1)^2 (x+2)
    const ExactPoly rep = ExactPoly{Rat(1), Rat(1)} * ExactPoly{Rat(1), Rat(1)} *
                          ExactPoly{Rat(2), Rat(1)};
    const auto r = certify_real_rooted_nonpositive(rep);
    CHECK(r.real_rooted);
    CHECK(r.all_roots_nonpositive);
    CHECK(r.distinct_real_roots == 2);

    CHECK_THROWS_AS(certify_real_rooted_nonpositive(ExactPoly()), std::domain_error);
}

TEST_CASE("certificates and log-concavity across the family sweep") {
    for (int n = 1; n <= 6; ++n) {
        for (int m : {3, 4}) {
            for (const auto& lambda : partitions_of(n)) {
                const GenusPolynomial g = gamma_constellation(m, n, lambda);
                const auto cert = certify_real_rooted_nonpositive(g);
                CHECK(cert.real_rooted);
                CHECK(cert.all_roots_nonpositive);
                CHECK(is_log_concave(g.coeffs).verdict == LogConcavity::yes);
            }
        }
    }
    for (int n = 1; n <= 8; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            CHECK(is_log_concave(gamma_digraph(n, lambda).coeffs).verdict == LogConcavity::yes);
        }
    }
}

TEST_CASE("expected_X and variance_X worked values") {
    CHECK(expected_X(3, 3, Partition({3})) == Rat(14, 3));
    CHECK(expected_X(3, 2, Partition({2})) == Rat(4));
    for (int m = 3; m <= 6; ++m) CHECK(expected_X(m, 1, Partition({1})) == Rat(m));

    CHECK(variance_X(3, 3, Partition({3})) == Rat(11, 9));
    CHECK(variance_X(3, 2, Partition({2})) == Rat(1));
    for (int m = 3; m <= 6; ++m) CHECK(variance_X(m, 1, Partition({1})) == Rat(0));

    CHECK_THROWS_AS(expected_X(2, 3, Partition({3})), std::domain_error);
    CHECK_THROWS_AS(variance_X(2, 3, Partition({3})), std::domain_error);
}

TEST_CASE("moments_from_gamma") {
    const GenusPolynomial g1{ints({1, 1}), Family::constellation, 3, 2, Partition({2})};
    const GammaMoments m1 = moments_from_gamma(g1);
    CHECK(m1.mean_genus == Rat(1, 2));
    CHECK(m1.var_genus == Rat(1, 4));
    CHECK(m1.mean_x == Rat(4));
    CHECK(m1.var_x == Rat(1));

    const GenusPolynomial g2{ints({2, 16, 6}), Family::constellation, 3, 3, Partition({3})};
    CHECK(moments_from_gamma(g2).mean_genus == Rat(7, 6));

    const GenusPolynomial g3{ints({5}), Family::constellation, 4, 1, Partition({1})};
    CHECK(moments_from_gamma(g3).var_genus == Rat(0));
}

TEST_CASE("closed-form moments equal distribution moments") {
    for (int n = 1; n <= 6; ++n) {
        for (int m : {3, 4, 5}) {
            for (const auto& lambda : partitions_of(n)) {
                const GammaMoments direct = moments_from_gamma(gamma_constellation(m, n, lambda));
                CHECK(expected_X(m, n, lambda) == direct.mean_x);
                CHECK(variance_X(m, n, lambda) == direct.var_x);
            }
        }
    }
    // for m >= 4 the variance does not depend on lambda
    for (int n = 1; n <= 7; ++n) {
        const auto all = partitions_of(n);
        for (int m : {4, 5}) {
            const Rat v0 = variance_X(m, n, all.front());
            for (const auto& lambda : all) CHECK(variance_X(m, n, lambda) == v0);
        }
    }
}

TEST_CASE("m = 3 correction term stays within 2") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const ExactPoly r = r_poly(n, lambda);
            Rat corr(0);
            for (int k = 1; k <= n - 1; ++k) {
                const Int b = binomial(n - 1, k - 1);
                corr += r.coeff(k) / Rat(b * b);
            }
            corr *= Rat(2, Int(n) * n);
            CHECK(boost::multiprecision::abs(corr) <= 2);
        }
    }
}

TEST_CASE("asymptotic parameters") {
    const auto p = asymptotic_params(3, 3, Partition({3}));
    // mu = 5/2 - ln 3, sigma^2 = (ln 3)/2
    const Dec ln3 = boost::multiprecision::log(Dec(3));
    CHECK(boost::multiprecision::abs(p.mu - (Dec(2.5) - ln3)) < Dec("1e-80"));
    CHECK(boost::multiprecision::abs(p.sigma_sq - ln3 / 2) < Dec("1e-80"));

    const auto p4 = asymptotic_params(4, 100, Partition({100}));
    const Dec ln100 = boost::multiprecision::log(Dec(100));
    CHECK(boost::multiprecision::abs(p4.sigma_sq - Dec(3) / 4 * ln100) < Dec("1e-80"));

    // n = 1: sigma^2 = 0 is reported, not an error
    CHECK(asymptotic_params(3, 1, Partition({1})).sigma_sq == 0);
}

TEST_CASE("moment_report ties the pieces together") {
    const MomentReport rep = moment_report(3, 3, Partition({3}));
    CHECK(rep.mean_x == Rat(14, 3));
    CHECK(rep.var_x == Rat(11, 9));
    CHECK(rep.mean_genus == Rat(7, 6));
    CHECK(rep.var_genus == Rat(11, 36));
    CHECK(rep.digits == 50);
    // the linear transform identities
    CHECK(rep.mean_genus == (Rat((rep.m - 1) * rep.n + 1) - rep.mean_x) / 2);
    CHECK(rep.var_genus == rep.var_x / 4);
}

TEST_CASE("asymptotic gaps for the dipole profile") {
    // |E[g] - mu| stays below 1 on the tested grid; the variance gap does
    // for m = 3 and 4 but approaches (m-1)(zeta(2)-gamma)/4 for large n,
    // which crosses 1 for m = 5.
    for (int m : {3, 4}) {
        for (int n : {10, 100, 1000}) {
            const AsymptoticGap gap = asymptotic_gap_ncycle(m, n);
            CHECK(gap.mean_gap < 1);
            CHECK(gap.var_gap < 1);
        }
    }
    CHECK(asymptotic_gap_ncycle(5, 10).var_gap < 1);
    CHECK(asymptotic_gap_ncycle(5, 100).var_gap > 1);
}
