#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "genusdist/characters.hpp"
#include "genusdist/partition.hpp"
#include "genusdist/permutation.hpp"
#include "genusdist/poly.hpp"

using namespace genusdist;

namespace {

// Independent partition counter: p(n) by the bounded-largest-part recurrence.
long long partition_count(int n) {
    std::vector<std::vector<long long>> p(n + 1, std::vector<long long>(n + 1, 0));
    for (int k = 0; k <= n; ++k) p[0][k] = 1;
    for (int s = 1; s <= n; ++s) {
        for (int k = 1; k <= n; ++k) {
            p[s][k] = p[s][k - 1] + (s >= k ? p[s - k][k] : 0);
        }
    }
    return p[n][n];
}

// Cycle type computed straight from an image array, no library calls.
std::vector<int> brute_cycle_type(const std::vector<int>& img) {
    std::vector<char> seen(img.size(), 0);
    std::vector<int> lens;
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = img[j]) {
            seen[j] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

std::vector<std::vector<int>> brute_symmetric_group(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace

TEST_CASE("partition construction and text form") {
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,x"), std::invalid_argument);
    const Partition p = Partition::parse("3,2,1");
    CHECK(p.weight() == 6);
    CHECK(p.length() == 3);
    CHECK(p.to_string() == "3,2,1");
    CHECK(Partition().weight() == 0);
    const Partition q = Partition::parse("2,2,1");
    CHECK(q.multiplicity(2) == 2);
    CHECK(q.multiplicity(1) == 1);
    CHECK(q.multiplicity(5) == 0);
}

TEST_CASE("partitions_of: order, counts, edge cases") {
    CHECK(partitions_of(1) == std::vector<Partition>{Partition({1})});

    const auto p4 = partitions_of(4);
    const std::vector<Partition> expected4 = {Partition({4}), Partition({3, 1}),
                                              Partition({2, 2}), Partition({2, 1, 1}),
                                              Partition({1, 1, 1, 1})};
    CHECK(p4 == expected4);

    CHECK(partitions_of(6).size() == 11);
    for (int n = 0; n <= 12; ++n) {
        const auto parts = partitions_of(n);
        CHECK(static_cast<long long>(parts.size()) == partition_count(n));
        // reverse-lexicographic: strictly decreasing as sequences
        for (std::size_t i = 1; i < parts.size(); ++i) {
            CHECK(std::lexicographical_compare(parts[i].parts().begin(), parts[i].parts().end(),
                                               parts[i - 1].parts().begin(),
                                               parts[i - 1].parts().end()));
        }
        std::set<Partition> distinct(parts.begin(), parts.end());
        CHECK(distinct.size() == parts.size());
        for (const auto& part : parts) CHECK(part.weight() == n);
    }

    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].length() == 0);
    CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);
}

TEST_CASE("conjugacy_class_size against direct enumeration") {
    CHECK(conjugacy_class_size(Partition({1, 1, 1})) == 1);
    CHECK(conjugacy_class_size(Partition({2, 1})) == 3);
    CHECK(conjugacy_class_size(Partition({5})) == 24);

    for (int n = 1; n <= 6; ++n) {
        std::map<std::vector<int>, long long> counts;
        for (const auto& img : brute_symmetric_group(n)) ++counts[brute_cycle_type(img)];
        for (const auto& lambda : partitions_of(n)) {
            const std::vector<int> key(lambda.parts().begin(), lambda.parts().end());
            CHECK(conjugacy_class_size(lambda) == Int(counts[key]));
        }
    }

    // class equation: the class sizes sum to n!
    for (int n = 1; n <= 7; ++n) {
        Int sum = 0;
        for (const auto& lambda : partitions_of(n)) sum += conjugacy_class_size(lambda);
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("hook_partition") {
    CHECK(hook_partition(5, 0) == Partition({5}));
    CHECK(hook_partition(5, 4) == Partition({1, 1, 1, 1, 1}));
    CHECK(hook_partition(5, 2) == Partition({3, 1, 1}));
    CHECK_THROWS_AS(hook_partition(5, 5), std::domain_error);
    CHECK_THROWS_AS(hook_partition(5, -1), std::domain_error);
    CHECK(hook_partition(5, 2).is_hook());
    CHECK(!Partition({2, 2}).is_hook());
}

TEST_CASE("dimension: hook length formula") {
    CHECK(dimension(Partition({7})) == 1);
    CHECK(dimension(Partition({2, 2})) == 2);
    for (int n = 1; n <= 8; ++n) {
        for (int a = 0; a <= n - 1; ++a) {
            CHECK(dimension(hook_partition(n, a)) == binomial(n - 1, a));
        }
    }
    // sum of squared dimensions is n!
    for (int n = 1; n <= 7; ++n) {
        Int sum = 0;
        for (const auto& theta : partitions_of(n)) {
            const Int d = dimension(theta);
            sum += d * d;
        }
        CHECK(sum == factorial(n));
    }
    // equality with the character at the identity class (independent path)
    for (int n = 1; n <= 7; ++n) {
        const Partition identity_class(std::vector<int>(n, 1));
        for (const auto& theta : partitions_of(n)) {
            CHECK(dimension(theta) == mn_character(theta, identity_class));
        }
    }
}

TEST_CASE("content_polynomial") {
    CHECK(content_polynomial(Partition({1})) == ExactPoly({Rat(0), Rat(1)}));
    CHECK(content_polynomial(Partition()) == ExactPoly::constant(Rat(1)));
    // [2,2]: cell contents 0, 1, -1, 0
    const ExactPoly h22 = content_polynomial(Partition({2, 2}));
    ExactPoly expected = ExactPoly({Rat(0), Rat(1)}) * ExactPoly({Rat(0), Rat(1)});
    expected = expected * ExactPoly({Rat(1), Rat(1)}) * ExactPoly({Rat(-1), Rat(1)});
    CHECK(h22 == expected);
    for (int n = 1; n <= 8; ++n) {
        CHECK(content_polynomial(hook_partition(n, 0)).evaluate(Rat(1)) == Rat(factorial(n)));
        for (int a = 1; a <= n - 1; ++a) {
            CHECK(content_polynomial(hook_partition(n, a)).evaluate(Rat(1)) == 0);
        }
        for (int a = 0; a <= n - 1; ++a) {
            CHECK(content_polynomial(hook_partition(n, a)) == falling_factorial_H(n, a));
        }
    }
}

TEST_CASE("permutation basics and group axioms") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    const Permutation swap01({1, 0, 2});
    CHECK(swap01.cycle_type() == Partition({2, 1}));
    CHECK(compose(swap01, swap01.inverse()) == Permutation::identity(3));
    CHECK(Permutation::canonical_n_cycle(5).cycle_type() == Partition({5}));
    CHECK(Permutation::canonical_n_cycle(5).cycle_count() == 1);

    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        std::vector<int> a(n), b(n);
        std::iota(a.begin(), a.end(), 0);
        std::iota(b.begin(), b.end(), 0);
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        const Permutation pa{a}, pb{b};
        CHECK(compose(pa, pa.inverse()) == Permutation::identity(n));
        CHECK(compose(pa.inverse(), pa) == Permutation::identity(n));
        CHECK(compose(pa, pb).inverse() == compose(pb.inverse(), pa.inverse()));
        CHECK(compose(compose(pa, pb), pa.inverse()).cycle_type() == pb.cycle_type());
        for (int x = 0; x < n; ++x) CHECK(compose(pa, pb)(x) == pa(pb(x)));
    }
    CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("enumerate_class yields each class element exactly once") {
    CHECK(conjugacy_class(Partition({2, 2})).size() == 3);
    for (int n = 1; n <= 6; ++n) {
        for (const auto& mu : partitions_of(n)) {
            std::set<std::vector<int>> seen;
            enumerate_class(mu, [&](const Permutation& p) {
                CHECK(p.cycle_type() == mu);
                seen.insert(std::vector<int>(p.images().begin(), p.images().end()));
            });
            CHECK(Int(seen.size()) == conjugacy_class_size(mu));
        }
    }
}
