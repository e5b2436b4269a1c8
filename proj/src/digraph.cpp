#include "genusdist/digraph.hpp"

#include <numeric>
#include <stdexcept>

namespace genusdist {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

EulerianDigraph EulerianDigraph::create(int vertices, std::vector<std::pair<int, int>> edges) {
    if (vertices < 1) throw std::invalid_argument("digraph needs at least one vertex");
    EulerianDigraph d;
    d.vertex_count_ = vertices;
    d.out_.resize(vertices);
    d.in_.resize(vertices);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [tail, head] = edges[e];
        if (tail < 0 || tail >= vertices || head < 0 || head >= vertices) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        d.out_[tail].push_back(static_cast<int>(e));
        d.in_[head].push_back(static_cast<int>(e));
    }
    d.edges_ = std::move(edges);

    for (int v = 0; v < vertices; ++v) {
        if (d.out_[v].size() != d.in_[v].size()) {
            throw std::invalid_argument("not Eulerian: vertex " + std::to_string(v) +
                                        " has in-degree != out-degree");
        }
    }

    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& [tail, head] : d.edges_) {
        parent[find_root(parent, tail)] = find_root(parent, head);
    }
    const int root = find_root(parent, 0);
    for (int v = 1; v < vertices; ++v) {
        if (find_root(parent, v) != root) {
            throw std::invalid_argument("digraph is not connected");
        }
    }
    return d;
}

EulerianDigraph EulerianDigraph::one_black(const Partition& lambda) {
    const int n = lambda.weight();
    if (n < 1) throw std::invalid_argument("one_black: empty degree profile");
    const int whites = lambda.length();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * n);
    for (int i = 0; i < whites; ++i) {
        for (int j = 0; j < lambda.part(i); ++j) edges.emplace_back(1 + i, 0);
    }
    for (int i = 0; i < whites; ++i) {
        for (int j = 0; j < lambda.part(i); ++j) edges.emplace_back(0, 1 + i);
    }
    return create(1 + whites, std::move(edges));
}

EulerianDigraph EulerianDigraph::bouquet(int n) {
    if (n < 0) throw std::invalid_argument("bouquet: negative n");
    std::vector<std::pair<int, int>> edges(n, {0, 0});
    return create(1, std::move(edges));
}

EulerianDigraph EulerianDigraph::dipole(int n) {
    return one_black(Partition(std::vector<int>{n}));
}

Int EulerianDigraph::total_embeddings() const {
    Int total = 1;
    for (int v = 0; v < vertex_count_; ++v) {
        const int d = half_degree(v);
        if (d > 0) total *= factorial(d) * factorial(d - 1);
    }
    return total;
}

}  // namespace genusdist
