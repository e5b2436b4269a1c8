#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genusdist/genus.hpp"
#include "genusdist/numeric.hpp"
#include "genusdist/partition.hpp"

using namespace genusdist;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("p_poly worked examples") {
    // (3, 2, [2]) -> t^5 + t^3
    const PPoly p1 = p_poly(3, 2, Partition({2}));
    CHECK(p1.poly == ExactPoly{Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(1)});
    // (2, 3, [3]) -> 2t^4 + 2t^2
    const PPoly p2 = p_poly(2, 3, Partition({3}));
    CHECK(p2.poly == ExactPoly{Rat(0), Rat(0), Rat(2), Rat(0), Rat(2)});
    // (m, 1, [1]) -> t^m
    for (int m = 2; m <= 5; ++m) {
        CHECK(p_poly(m, 1, Partition({1})).poly == ExactPoly::monomial(m));
    }
    CHECK_THROWS_AS(p_poly(1, 2, Partition({2})), std::domain_error);
    CHECK_THROWS_AS(p_poly(3, 2, Partition({3})), std::invalid_argument);
}

TEST_CASE("both evaluation routes agree") {
    for (int n = 1; n <= 8; ++n) {
        for (int m : {2, 3, 4}) {
            for (const auto& lambda : partitions_of(n)) {
                const PPoly a = p_poly(m, n, lambda, PRoute::character);
                const PPoly b = p_poly(m, n, lambda, PRoute::shift_operator);
                CHECK(a.poly == b.poly);
            }
        }
    }
}

TEST_CASE("p_to_gamma") {
    CHECK(p_to_gamma(p_poly(3, 2, Partition({2}))).coeffs == ints({1, 1}));
    CHECK(p_to_gamma(p_poly(2, 3, Partition({3}))).coeffs == ints({2, 2}));
    CHECK(p_to_gamma(p_poly(4, 1, Partition({1}))).coeffs == ints({1}));
}

TEST_CASE("gamma_constellation examples and normalization") {
    CHECK(gamma_constellation(3, 3, Partition({3})).coeffs == ints({2, 16, 6}));
    CHECK(gamma_constellation(3, 2, Partition({2})).coeffs == ints({1, 1}));
    CHECK(gamma_constellation(2, 3, Partition({3})).coeffs == ints({2, 2}));

    // total count |C(lambda)| (n-1)! (n!)^{m-2}; planar count positive;
    // top genus within floor(((m-1)n + 1 - l)/2)
    for (int n = 1; n <= 8; ++n) {
        for (int m = 2; m <= 4; ++m) {
            for (const auto& lambda : partitions_of(n)) {
                const GenusPolynomial g = gamma_constellation(m, n, lambda);
                Int expected = conjugacy_class_size(lambda) * factorial(n - 1);
                for (int i = 0; i < m - 2; ++i) expected *= factorial(n);
                CHECK(g.total() == expected);
                CHECK(g.coeffs[0] > 0);
                CHECK(g.degree() <= ((m - 1) * n + 1 - lambda.length()) / 2);
            }
        }
    }
}

TEST_CASE("gamma_digraph, bouquet, dipole") {
    CHECK(gamma_digraph(2, Partition({2})).coeffs == ints({2, 2}));
    CHECK(gamma_digraph(3, Partition({1, 1, 1})).coeffs == ints({10, 2}));
    CHECK(gamma_digraph(1, Partition({1})).coeffs == ints({1}));

    CHECK(bouquet_gamma(3).coeffs == ints({10, 2}));
    CHECK(bouquet_gamma(5).coeffs == ints({1008, 1680, 192}));
    CHECK(bouquet_gamma(8).coeffs == ints({7207200, 60540480, 104781600, 30683520}));

    CHECK(dipole_gamma(1).coeffs == ints({1}));
    CHECK(dipole_gamma(3).coeffs == ints({12, 96, 36}));
    CHECK(dipole_gamma(5).coeffs == ints({2880, 230400, 2594880, 4752000, 714240}));

    CHECK(bouquet_gamma(4).pretty() == "84 + 60x");
    CHECK(gamma_constellation(3, 2, Partition({2})).pretty() == "1 + x");
    CHECK(dipole_gamma(1).pretty() == "1");
}

TEST_CASE("fan decomposition and gamma") {
    // directed triangle: handle removal leaves one edge
    const auto triangle = EulerianDigraph::create(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(fan_decompose(triangle, 0).lambda == Partition({1}));
    CHECK(fan_gamma(triangle, 0).coeffs == ints({1}));

    // 5-edge fan: u->a, u->a, a->b, b->u, a->u with handle u
    const auto fan5 = EulerianDigraph::create(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}, {1, 0}});
    const FanShape shape = fan_decompose(fan5, 0);
    CHECK(shape.n == 2);
    CHECK(shape.lambda == Partition({2}));
    CHECK(fan_gamma(fan5, 0).coeffs == ints({2, 2}));

    // the one-black digraph is its own fan: contraction is the identity
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const auto d = EulerianDigraph::one_black(lambda);
            const GenusPolynomial via_fan = fan_gamma(d, 0);
            CHECK(via_fan.coeffs == gamma_digraph(n, lambda).coeffs);
        }
    }

    // dipole through either vertex as handle
    for (int n = 1; n <= 5; ++n) {
        const auto d = EulerianDigraph::dipole(n);
        CHECK(fan_gamma(d, 0).coeffs == dipole_gamma(n).coeffs);
        CHECK(fan_gamma(d, 1).coeffs == dipole_gamma(n).coeffs);
    }

    // larger fan with a non-trivial scaling constant: the handle feeds a
    // directed path a->b->c->d and a pendant vertex; the forest components
    // contribute lambda = [5,1] and the rescaling is by 1/180
    const auto path_fan = EulerianDigraph::create(
        6, {{1, 2}, {2, 3}, {3, 4},
            {1, 0}, {2, 0}, {3, 0}, {4, 0}, {4, 0},
            {0, 1}, {0, 1}, {0, 2}, {0, 3}, {0, 4},
            {5, 0}, {0, 5}});
    const FanShape path_shape = fan_decompose(path_fan, 0);
    CHECK(path_shape.n == 6);
    CHECK(path_shape.lambda == Partition({5, 1}));
    const GenusPolynomial path_gamma = fan_gamma(path_fan, 0);
    CHECK(path_gamma.coeffs == ints({160, 16000, 249120, 766400, 350720}));
    CHECK(path_gamma.total() * 180 == gamma_digraph(6, Partition({5, 1})).total());

    // handle whose removal leaves a cycle
    const auto theta = EulerianDigraph::create(
        5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    CHECK_THROWS_AS(fan_gamma(theta, 0), not_fan_error);
    CHECK(fan_gamma(theta, 2).coeffs.size() > 0);  // vertex 2 does qualify

    // self-loop at the handle
    const auto looped = EulerianDigraph::create(2, {{0, 0}, {0, 1}, {1, 0}});
    CHECK_THROWS_AS(fan_gamma(looped, 0), not_fan_error);

    CHECK_THROWS_AS(fan_gamma(triangle, 7), std::invalid_argument);
}

TEST_CASE("digraph validation") {
    CHECK_THROWS_AS(EulerianDigraph::create(2, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(EulerianDigraph::create(2, {{0, 0}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(EulerianDigraph::create(1, {{0, 1}}), std::invalid_argument);
    const auto b3 = EulerianDigraph::bouquet(3);
    CHECK(b3.total_embeddings() == 12);  // 3! * 2!
    const auto d22 = EulerianDigraph::one_black(Partition({2, 2}));
    CHECK(d22.vertex_count() == 3);
    CHECK(d22.edge_count() == 8);
    CHECK(d22.half_degree(0) == 4);
    CHECK(d22.half_degree(1) == 2);
}

TEST_CASE("family names round-trip") {
    for (Family f : {Family::constellation, Family::digraph, Family::bouquet, Family::dipole,
                     Family::fan}) {
        CHECK(family_from_name(family_name(f)) == f);
    }
    CHECK_THROWS_AS(family_from_name("nope"), std::invalid_argument);
}
