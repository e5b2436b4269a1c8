#pragma once

#include <map>
#include <string>
#include <vector>

#include "genusdist/digraph.hpp"
#include "genusdist/genus.hpp"
#include "genusdist/partition.hpp"

namespace genusdist {

/// Exact genus -> count map produced by exhaustive enumeration.
struct GenusHistogram {
    std::map<int, Int> counts;

    Int total() const;
    bool matches(const GenusPolynomial& gamma) const;
    std::string pretty() const;  // "{0: 2, 1: 16, 2: 6}"

    bool operator==(const GenusHistogram&) const = default;
};

struct OracleOptions {
    Int budget{100000000};  // maximum number of enumerated tuples
    int threads = 1;
};

/// |C(lambda)| (n-1)! (n!)^{m-2}: tuples visited by enumerate_factorizations.
Int factorization_space(int m, int n, const Partition& lambda);
/// (n-1)! |C(lambda)| n!: tuples visited by enumerate_bieulerian_4tuples.
Int four_tuple_space(int n, const Partition& lambda);

/// Exhausts identity factorizations phi s_0 s_1 ... s_{m-1} = id with
/// phi in C(lambda), s_0 an n-cycle, s_1..s_{m-2} free and s_{m-1} solved
/// from the product. Histogram over
/// g = 1 + ((m-1)n - l(lambda) - sum_i cyc(s_i)) / 2.
/// Deterministic for any thread count; refuses over-budget spaces.
GenusHistogram enumerate_factorizations(int m, int n, const Partition& lambda,
                                        const OracleOptions& opts = {});

/// Exhausts the alternating rotation systems of d (one per face-oriented
/// embedding), traces faces, and computes genus from Euler's relation
/// v - e + f = 2 - 2g. At each vertex the cyclic order is anchored at the
/// smallest out-edge so rotations are not double-counted.
GenusHistogram enumerate_embeddings(const EulerianDigraph& d, const OracleOptions& opts = {});

/// Exhausts 4-tuples (phi_w, s_w, phi_b, s_b) with s_b an n-cycle,
/// s_w in C(lambda) and phi_w s_w phi_b s_b = id (phi_w solved); genus from
/// cyc(s_b) + cyc(s_w) + cyc(phi_b) + cyc(phi_w) = 2n + 2 - 2g.
GenusHistogram enumerate_bieulerian_4tuples(int n, const Partition& lambda,
                                            const OracleOptions& opts = {});

/// Exhaustive count of k-tuples (s_1, ..., s_k) with s_i in C(mu_i) and
/// s_1...s_k = id: the first k-1 factors are enumerated, the last is solved
/// and its cycle type checked. Ground truth for frobenius_count.
Int count_identity_products(std::span<const Partition> cycle_types,
                            const OracleOptions& opts = {});

/// Explicit rotation system: per vertex, the cyclic order of incident darts.
/// Dart 2e sits at the tail of edge e, dart 2e+1 at its head; in- and
/// out-darts must alternate around every vertex.
struct RotationSystem {
    std::vector<std::vector<int>> order;
};

struct FaceTraceResult {
    int faces = 0;
    int forward_faces = 0;   // boundary follows the edge directions
    int backward_faces = 0;  // boundary runs against them
};

/// Traces all faces of the embedding given by rot. The next dart after
/// arriving at a vertex is the rotation successor of the arrival dart.
/// Throws internal_error if some face mixes edge orientations, which would
/// falsify the alternating-rotation model.
FaceTraceResult face_trace(const EulerianDigraph& d, const RotationSystem& rot);

}  // namespace genusdist
