#include "genusdist/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "genusdist/permutation.hpp"

namespace genusdist {

Int GenusHistogram::total() const {
    Int t = 0;
    for (const auto& [g, c] : counts) t += c;
    return t;
}

bool GenusHistogram::matches(const GenusPolynomial& gamma) const {
    for (const auto& [g, c] : counts) {
        if (gamma.coeff(g) != c) return false;
    }
    for (int g = 0; g <= gamma.degree(); ++g) {
        if (gamma.coeffs[g] == 0) continue;
        const auto it = counts.find(g);
        if (it == counts.end() || it->second != gamma.coeffs[g]) return false;
    }
    return true;
}

std::string GenusHistogram::pretty() const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [g, c] : counts) {
        if (!first) out << ", ";
        first = false;
        out << g << ": " << c.str();
    }
    out << "}";
    return out.str();
}

namespace {

void check_budget(const Int& space, const OracleOptions& opts) {
    if (space > opts.budget) throw budget_error(space.str(), opts.budget.str());
}

void merge_into(GenusHistogram& into, const GenusHistogram& part) {
    for (const auto& [g, c] : part.counts) into.counts[g] += c;
}

int clamp_threads(int requested, std::size_t work_items) {
    if (requested < 1) requested = 1;
    return static_cast<int>(std::min<std::size_t>(requested, std::max<std::size_t>(work_items, 1)));
}

std::vector<std::vector<int>> class_images(const Partition& mu) {
    std::vector<std::vector<int>> out;
    enumerate_class(mu, [&](const Permutation& p) {
        out.emplace_back(p.images().begin(), p.images().end());
    });
    return out;
}

std::vector<std::vector<int>> all_images(int n) {
    std::vector<std::vector<int>> out;
    for (const Permutation& p : all_permutations(n)) {
        out.emplace_back(p.images().begin(), p.images().end());
    }
    return out;
}

int add_genus(GenusHistogram& hist, int numerator_twice, const char* context) {
    if (numerator_twice % 2 != 0) {
        throw internal_error(std::string(context) + ": odd Euler count, genus not an integer");
    }
    const int g = numerator_twice / 2;
    if (g < 0) throw internal_error(std::string(context) + ": negative genus");
    ++hist.counts[g];
    return g;
}

}  // namespace

Int factorization_space(int m, int n, const Partition& lambda) {
    if (m < 2) throw std::domain_error("factorization_space: m must be at least 2");
    if (n < 1 || lambda.weight() != n) {
        throw std::invalid_argument("factorization_space: lambda must be a partition of n");
    }
    Int space = conjugacy_class_size(lambda) * factorial(n - 1);
    for (int i = 0; i < m - 2; ++i) space *= factorial(n);
    return space;
}

Int four_tuple_space(int n, const Partition& lambda) {
    if (n < 1 || lambda.weight() != n) {
        throw std::invalid_argument("four_tuple_space: lambda must be a partition of n");
    }
    return factorial(n - 1) * conjugacy_class_size(lambda) * factorial(n);
}

GenusHistogram enumerate_factorizations(int m, int n, const Partition& lambda,
                                        const OracleOptions& opts) {
    check_budget(factorization_space(m, n, lambda), opts);

    const auto lam = class_images(lambda);
    const auto ncyc = class_images(Partition(std::vector<int>{n}));
    const auto frees = (m >= 3) ? all_images(n) : std::vector<std::vector<int>>{};
    std::vector<int> free_cyc(frees.size());
    {
        std::vector<char> scratch(n);
        for (std::size_t i = 0; i < frees.size(); ++i) {
            free_cyc[i] = cycle_count_raw(frees[i], scratch);
        }
    }

    const int l = lambda.length();
    const int threads = clamp_threads(opts.threads, lam.size());
    std::vector<GenusHistogram> partial(threads);
    std::vector<std::thread> pool;

    auto worker = [&](int t, std::size_t lo, std::size_t hi) {
        GenusHistogram& hist = partial[t];
        std::vector<char> scratch(n);
        // prefix[d] = phi s_0 s_1 ... s_d as composed images.
        std::vector<std::vector<int>> prefix(m - 1, std::vector<int>(n));
        std::vector<std::size_t> slot(std::max(m - 2, 0), 0);

        auto leaf = [&](const std::vector<int>& product, int free_cyc_sum) {
            const int total_cyc = 1 + free_cyc_sum + cycle_count_raw(product, scratch);
            add_genus(hist, (m - 1) * n - l - total_cyc + 2, "enumerate_factorizations");
        };

        for (std::size_t li = lo; li < hi; ++li) {
            const auto& phi = lam[li];
            for (const auto& sigma0 : ncyc) {
                for (int x = 0; x < n; ++x) prefix[0][x] = phi[sigma0[x]];
                if (m == 2) {
                    leaf(prefix[0], 0);
                    continue;
                }
                // Depth-first over the m-2 free factors.
                int depth = 0;
                int cyc_sum = 0;
                slot.assign(m - 2, 0);
                for (;;) {
                    if (slot[depth] == frees.size()) {
                        if (depth == 0) break;
                        --depth;
                        cyc_sum -= free_cyc[slot[depth]];
                        ++slot[depth];
                        continue;
                    }
                    const auto& tau = frees[slot[depth]];
                    for (int x = 0; x < n; ++x) prefix[depth + 1][x] = prefix[depth][tau[x]];
                    if (depth == m - 3) {
                        leaf(prefix[depth + 1], cyc_sum + free_cyc[slot[depth]]);
                        ++slot[depth];
                    } else {
                        cyc_sum += free_cyc[slot[depth]];
                        ++depth;
                        slot[depth] = 0;
                    }
                }
            }
        }
    };

    if (threads == 1) {
        worker(0, 0, lam.size());
    } else {
        const std::size_t chunk = (lam.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::size_t lo = std::min(lam.size(), t * chunk);
            const std::size_t hi = std::min(lam.size(), (t + 1) * chunk);
            pool.emplace_back(worker, t, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    GenusHistogram result;
    for (const auto& part : partial) merge_into(result, part);
    return result;
}

GenusHistogram enumerate_bieulerian_4tuples(int n, const Partition& lambda,
                                            const OracleOptions& opts) {
    check_budget(four_tuple_space(n, lambda), opts);

    const auto ncyc = class_images(Partition(std::vector<int>{n}));
    const auto lam = class_images(lambda);
    const auto frees = all_images(n);
    std::vector<int> free_cyc(frees.size());
    {
        std::vector<char> scratch(n);
        for (std::size_t i = 0; i < frees.size(); ++i) {
            free_cyc[i] = cycle_count_raw(frees[i], scratch);
        }
    }

    const int l = lambda.length();
    const int threads = clamp_threads(opts.threads, ncyc.size());
    std::vector<GenusHistogram> partial(threads);
    std::vector<std::thread> pool;

    auto worker = [&](int t, std::size_t lo, std::size_t hi) {
        GenusHistogram& hist = partial[t];
        std::vector<char> scratch(n);
        std::vector<int> tmp(n), product(n);
        for (std::size_t bi = lo; bi < hi; ++bi) {
            const auto& sigma_b = ncyc[bi];
            for (const auto& sigma_w : lam) {
                for (std::size_t fi = 0; fi < frees.size(); ++fi) {
                    const auto& phi_b = frees[fi];
                    // phi_w = (sigma_w phi_b sigma_b)^{-1}; cycle count of the
                    // inverse equals that of the product itself.
                    for (int x = 0; x < n; ++x) tmp[x] = phi_b[sigma_b[x]];
                    for (int x = 0; x < n; ++x) product[x] = sigma_w[tmp[x]];
                    const int cyc_sum =
                        1 + l + free_cyc[fi] + cycle_count_raw(product, scratch);
                    add_genus(hist, 2 * n + 2 - cyc_sum, "enumerate_bieulerian_4tuples");
                }
            }
        }
    };

    if (threads == 1) {
        worker(0, 0, ncyc.size());
    } else {
        const std::size_t chunk = (ncyc.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::size_t lo = std::min(ncyc.size(), t * chunk);
            const std::size_t hi = std::min(ncyc.size(), (t + 1) * chunk);
            pool.emplace_back(worker, t, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    GenusHistogram result;
    for (const auto& part : partial) merge_into(result, part);
    return result;
}

Int count_identity_products(std::span<const Partition> cycle_types, const OracleOptions& opts) {
    if (cycle_types.empty()) {
        throw std::invalid_argument("count_identity_products: need k >= 1 classes");
    }
    const int n = cycle_types.front().weight();
    for (const Partition& mu : cycle_types) {
        if (mu.weight() != n) {
            throw std::invalid_argument("count_identity_products: weight mismatch");
        }
    }
    const int k = static_cast<int>(cycle_types.size());
    Int space = 1;
    for (int i = 0; i < k - 1; ++i) space *= conjugacy_class_size(cycle_types[i]);
    check_budget(space, opts);

    const Partition& last = cycle_types[k - 1];
    if (k == 1) return last == Partition(std::vector<int>(n, 1)) ? 1 : 0;

    std::vector<std::vector<std::vector<int>>> classes;
    for (int i = 0; i < k - 1; ++i) classes.push_back(class_images(cycle_types[i]));

    Int count = 0;
    std::vector<std::vector<int>> prefix(k - 1, std::vector<int>(n));
    std::vector<std::size_t> slot(k - 1, 0);
    int depth = 0;
    for (;;) {
        if (slot[depth] == classes[depth].size()) {
            if (depth == 0) break;
            --depth;
            ++slot[depth];
            continue;
        }
        const auto& sigma = classes[depth][slot[depth]];
        if (depth == 0) {
            prefix[0] = sigma;
        } else {
            for (int x = 0; x < n; ++x) prefix[depth][x] = prefix[depth - 1][sigma[x]];
        }
        if (depth == k - 2) {
            // s_k = prefix^{-1}; an inverse has the same cycle type.
            if (Permutation(prefix[depth]).cycle_type() == last) ++count;
            ++slot[depth];
        } else {
            ++depth;
            slot[depth] = 0;
        }
    }
    return count;
}

namespace {

// Mutable rotation state of one vertex. The first out-dart (smallest edge
// id) is pinned as the cyclic anchor; the remaining out-darts and all
// in-darts run through their permutations in lexicographic order.
struct VertexRot {
    int anchor = -1;
    std::vector<int> out_rest;
    std::vector<int> ins;
    std::vector<int> out_rest_sorted;
    std::vector<int> ins_sorted;

    Int count() const {
        return factorial(static_cast<int>(out_rest.size())) *
               factorial(static_cast<int>(ins.size()));
    }

    bool advance() {
        if (std::next_permutation(ins.begin(), ins.end())) return true;
        return std::next_permutation(out_rest.begin(), out_rest.end());
    }

    void set_rank(Int rank) {
        const Int in_count = factorial(static_cast<int>(ins.size()));
        unrank(out_rest_sorted, (rank / in_count).convert_to<unsigned long long>(), out_rest);
        unrank(ins_sorted, (rank % in_count).convert_to<unsigned long long>(), ins);
    }

    static void unrank(const std::vector<int>& sorted, unsigned long long rank,
                       std::vector<int>& out) {
        std::vector<int> pool = sorted;
        out.clear();
        unsigned long long fact = 1;
        for (std::size_t i = 2; i <= pool.size(); ++i) fact *= i;
        while (!pool.empty()) {
            if (pool.size() > 1) fact /= pool.size();
            const std::size_t idx = pool.size() > 1 ? rank / fact : 0;
            rank %= std::max<unsigned long long>(fact, 1);
            out.push_back(pool[idx]);
            pool.erase(pool.begin() + idx);
        }
    }
};

// Writes the rotation successor of every dart under the current state.
void fill_next(const std::vector<VertexRot>& rots, std::vector<int>& next) {
    for (const VertexRot& r : rots) {
        if (r.anchor < 0) continue;
        const int d = static_cast<int>(r.ins.size());
        int prev = r.anchor;
        for (int j = 0; j < d; ++j) {
            next[prev] = r.ins[j];
            prev = r.ins[j];
            if (j + 1 < d) {
                next[prev] = r.out_rest[j];
                prev = r.out_rest[j];
            }
        }
        next[prev] = r.anchor;
    }
}

// Orbits of dart -> next[dart ^ 1] are the faces; a face mixing out-darts
// (even ids) with in-darts (odd ids) would not be uniformly oriented.
FaceTraceResult count_faces(const std::vector<int>& next, std::vector<char>& visited) {
    std::fill(visited.begin(), visited.end(), 0);
    FaceTraceResult res;
    const int darts = static_cast<int>(next.size());
    for (int start = 0; start < darts; ++start) {
        if (visited[start]) continue;
        const int parity = start & 1;
        int dart = start;
        do {
            if ((dart & 1) != parity) {
                throw internal_error("face_trace: face mixes edge orientations");
            }
            visited[dart] = 1;
            dart = next[dart ^ 1];
        } while (dart != start);
        ++res.faces;
        ++(parity == 0 ? res.forward_faces : res.backward_faces);
    }
    return res;
}

std::vector<VertexRot> initial_rotations(const EulerianDigraph& d) {
    std::vector<VertexRot> rots(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v) {
        VertexRot& r = rots[v];
        const auto outs = d.out_edges(v);
        const auto ins = d.in_edges(v);
        if (outs.empty()) continue;
        r.anchor = 2 * outs.front();
        for (std::size_t i = 1; i < outs.size(); ++i) r.out_rest_sorted.push_back(2 * outs[i]);
        for (int e : ins) r.ins_sorted.push_back(2 * e + 1);
        r.out_rest = r.out_rest_sorted;
        r.ins = r.ins_sorted;
    }
    return rots;
}

}  // namespace

GenusHistogram enumerate_embeddings(const EulerianDigraph& d, const OracleOptions& opts) {
    const Int space = d.total_embeddings();
    check_budget(space, opts);

    GenusHistogram result;
    if (d.edge_count() == 0) {
        result.counts[0] = 1;  // single vertex on the sphere
        return result;
    }

    const int v = d.vertex_count();
    const int e = d.edge_count();
    int threads = std::max(1, opts.threads);
    if (space < threads) threads = space.convert_to<int>();
    std::vector<GenusHistogram> partial(threads);
    std::vector<std::thread> pool;

    auto worker = [&](int t, Int lo, Int hi) {
        GenusHistogram& hist = partial[t];
        std::vector<VertexRot> rots = initial_rotations(d);
        // Decode the mixed-radix start rank, vertex 0 most significant.
        Int rank = lo;
        for (int vi = v - 1; vi >= 0; --vi) {
            const Int c = rots[vi].count();
            rots[vi].set_rank(rank % c);
            rank /= c;
        }
        std::vector<int> next(2 * e);
        std::vector<char> visited(2 * e);
        for (Int i = lo; i < hi; ++i) {
            fill_next(rots, next);
            const FaceTraceResult faces = count_faces(next, visited);
            add_genus(hist, 2 - v + e - faces.faces, "enumerate_embeddings");
            // Odometer step, least significant vertex last.
            for (int vi = v - 1; vi >= 0; --vi) {
                if (rots[vi].advance()) break;
            }
        }
    };

    if (threads == 1) {
        worker(0, 0, space);
    } else {
        for (int t = 0; t < threads; ++t) {
            const Int lo = space * t / threads;
            const Int hi = space * (t + 1) / threads;
            pool.emplace_back(worker, t, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    for (const auto& part : partial) merge_into(result, part);
    if (result.total() != space) {
        throw internal_error("enumerate_embeddings: histogram total differs from rotation count");
    }
    return result;
}

FaceTraceResult face_trace(const EulerianDigraph& d, const RotationSystem& rot) {
    if (static_cast<int>(rot.order.size()) != d.vertex_count()) {
        throw std::invalid_argument("face_trace: rotation system has wrong vertex count");
    }
    const int darts = 2 * d.edge_count();
    std::vector<int> next(darts, -1);
    std::vector<char> seen(darts, 0);
    for (int v = 0; v < d.vertex_count(); ++v) {
        const auto& seq = rot.order[v];
        if (static_cast<int>(seq.size()) != 2 * d.half_degree(v)) {
            throw std::invalid_argument("face_trace: vertex rotation has wrong length");
        }
        for (std::size_t j = 0; j < seq.size(); ++j) {
            const int dart = seq[j];
            if (dart < 0 || dart >= darts || seen[dart]) {
                throw std::invalid_argument("face_trace: invalid or repeated dart");
            }
            seen[dart] = 1;
            const int edge = dart / 2;
            const int at = (dart % 2 == 0) ? d.edge(edge).first : d.edge(edge).second;
            if (at != v) throw std::invalid_argument("face_trace: dart listed at wrong vertex");
            if (j > 0 && (seq[j] & 1) == (seq[j - 1] & 1)) {
                throw std::invalid_argument("face_trace: rotation does not alternate in/out");
            }
            next[seq[j]] = seq[(j + 1) % seq.size()];
        }
        if (!seq.empty() && (seq.front() & 1) == (seq.back() & 1)) {
            throw std::invalid_argument("face_trace: rotation does not alternate in/out");
        }
    }
    std::vector<char> visited(darts, 0);
    return count_faces(next, visited);
}

}  // namespace genusdist
