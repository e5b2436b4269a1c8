#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genusdist/numeric.hpp"

namespace genusdist {

class ExactPoly;

/// Integer partition: a non-increasing sequence of positive parts.
/// Immutable after construction.
class Partition {
public:
    Partition() = default;  // the empty partition of 0
    explicit Partition(std::vector<int> parts);

    /// Parses the text form used across the CLI and JSON: "3,2,1".
    static Partition parse(std::string_view text);

    int weight() const { return weight_; }                              // n
    int length() const { return static_cast<int>(parts_.size()); }      // l(lambda)
    std::span<const int> parts() const { return parts_; }
    int part(int i) const { return parts_[i]; }

    /// m_v(lambda): number of parts equal to v.
    int multiplicity(int value) const;
    /// (value, count) pairs, distinct values in decreasing order.
    std::vector<std::pair<int, int>> multiplicities() const;

    bool is_hook() const;

    std::string to_string() const;  // "3,2,1"; empty partition -> ""

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

std::ostream& operator<<(std::ostream& out, const Partition& p);

/// All partitions of n, each exactly once, in reverse-lexicographic order
/// ([n] first, [1^n] last). n = 0 yields the single empty partition.
std::vector<Partition> partitions_of(int n);

/// |C(lambda)| = n! / prod_v (v^{m_v} m_v!), the number of permutations in
/// S_n with cycle type lambda.
Int conjugacy_class_size(const Partition& lambda);

/// The hook partition [n-a, 1^a], 0 <= a <= n-1.
Partition hook_partition(int n, int a);

/// Dimension f^theta of the irreducible representation indexed by theta,
/// via the hook length formula.
Int dimension(const Partition& theta);

/// H_theta(x) = prod over Ferrers cells w of (x + c(w)) with content
/// c(w) = column - row. Monic of degree |theta|; the empty partition gives 1.
ExactPoly content_polynomial(const Partition& theta);

}  // namespace genusdist
