#pragma once

#include <span>
#include <utility>
#include <vector>

#include "genusdist/numeric.hpp"
#include "genusdist/partition.hpp"

namespace genusdist {

/// Labeled Eulerian digraph: edge ids are positions in the edge list.
/// Construction validates that every vertex is balanced (in-degree equals
/// out-degree) and that the underlying graph is connected.
class EulerianDigraph {
public:
    static EulerianDigraph create(int vertices, std::vector<std::pair<int, int>> edges);

    /// The bipartite Eulerian digraph with one black vertex (id 0) of degree
    /// 2n and one white vertex per part of lambda, the i-th of degree
    /// 2*lambda_i. White out-edges come first in the labeling, then black
    /// out-edges, grouped by white vertex.
    static EulerianDigraph one_black(const Partition& lambda);

    /// n loops on a single vertex.
    static EulerianDigraph bouquet(int n);

    /// Two vertices joined by n edges each way; same as one_black([n]).
    static EulerianDigraph dipole(int n);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::pair<int, int> edge(int e) const { return edges_[e]; }
    std::span<const std::pair<int, int>> edges() const { return edges_; }

    /// Edge ids leaving / entering v, ascending.
    std::span<const int> out_edges(int v) const { return out_[v]; }
    std::span<const int> in_edges(int v) const { return in_[v]; }
    int half_degree(int v) const { return static_cast<int>(out_[v].size()); }

    /// prod_v d_v! (d_v - 1)!: the number of rotation systems in which in-
    /// and out-edges alternate around every vertex, i.e. the total number of
    /// face-oriented embeddings.
    Int total_embeddings() const;

private:
    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

}  // namespace genusdist
