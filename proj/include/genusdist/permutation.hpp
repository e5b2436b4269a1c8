#pragma once

#include <functional>
#include <span>
#include <vector>

#include "genusdist/partition.hpp"

namespace genusdist {

/// Permutation of {0, ..., n-1} in one-line notation (image of each point).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// The cycle 0 -> 1 -> ... -> n-1 -> 0.
    static Permutation canonical_n_cycle(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    std::span<const int> images() const { return images_; }

    Permutation inverse() const;
    Partition cycle_type() const;
    int cycle_count() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Function composition: compose(a, b)(x) = a(b(x)). Sizes must match.
Permutation compose(const Permutation& a, const Permutation& b);

/// Visits every permutation of cycle type mu in S_n (n = weight of mu),
/// each exactly once.
void enumerate_class(const Partition& mu, const std::function<void(const Permutation&)>& visit);

/// Materialized conjugacy class C(mu).
std::vector<Permutation> conjugacy_class(const Partition& mu);

/// All n! permutations, lexicographic by one-line notation.
std::vector<Permutation> all_permutations(int n);

/// Cycle count of a raw image array; scratch must have size n.
int cycle_count_raw(std::span<const int> images, std::vector<char>& scratch);

}  // namespace genusdist
