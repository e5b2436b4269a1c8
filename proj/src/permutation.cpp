#include "genusdist/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace genusdist {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= size() || seen[v]) {
            throw std::invalid_argument("permutation images must be a bijection of {0..n-1}");
        }
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::canonical_n_cycle(int n) {
    if (n < 1) throw std::invalid_argument("canonical_n_cycle: n must be positive");
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (int i = 0; i < size(); ++i) img[images_[i]] = i;
    return Permutation(std::move(img));
}

Partition Permutation::cycle_type() const {
    std::vector<char> seen(images_.size(), 0);
    std::vector<int> lengths;
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

int Permutation::cycle_count() const {
    std::vector<char> seen(images_.size(), 0);
    return cycle_count_raw(images_, seen);
}

int cycle_count_raw(std::span<const int> images, std::vector<char>& scratch) {
    std::fill(scratch.begin(), scratch.end(), 0);
    int cycles = 0;
    for (int i = 0; i < static_cast<int>(images.size()); ++i) {
        if (scratch[i]) continue;
        ++cycles;
        for (int j = i; !scratch[j]; j = images[j]) scratch[j] = 1;
    }
    return cycles;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> img(a.size());
    for (int i = 0; i < a.size(); ++i) img[i] = a(b(i));
    return Permutation(std::move(img));
}

namespace {

// Builds class elements cycle by cycle. Each cycle starts at the smallest
// point not yet placed, and equal cycle lengths are deduplicated by choosing
// a distinct remaining length per step, so every element appears once.
struct ClassEnumerator {
    int n;
    std::vector<int> img;
    std::vector<char> used;
    std::vector<int> remaining;  // multiset of cycle lengths, descending
    const std::function<void(const Permutation&)>& visit;

    void run() { place_next_cycle(); }

    void place_next_cycle() {
        int start = -1;
        for (int i = 0; i < n; ++i) {
            if (!used[i]) {
                start = i;
                break;
            }
        }
        if (start < 0) {
            visit(Permutation(img));
            return;
        }
        for (std::size_t pi = 0; pi < remaining.size(); ++pi) {
            if (pi > 0 && remaining[pi] == remaining[pi - 1]) continue;
            const int len = remaining[pi];
            remaining.erase(remaining.begin() + pi);
            used[start] = 1;
            extend_cycle(start, start, len - 1);
            used[start] = 0;
            remaining.insert(remaining.begin() + pi, len);
        }
    }

    void extend_cycle(int start, int prev, int left) {
        if (left == 0) {
            img[prev] = start;
            place_next_cycle();
            return;
        }
        for (int next = 0; next < n; ++next) {
            if (used[next]) continue;
            used[next] = 1;
            img[prev] = next;
            extend_cycle(start, next, left - 1);
            used[next] = 0;
        }
    }
};

}  // namespace

void enumerate_class(const Partition& mu, const std::function<void(const Permutation&)>& visit) {
    const int n = mu.weight();
    ClassEnumerator e{n,
                      std::vector<int>(n, -1),
                      std::vector<char>(n, 0),
                      std::vector<int>(mu.parts().begin(), mu.parts().end()),
                      visit};
    e.run();
}

std::vector<Permutation> conjugacy_class(const Partition& mu) {
    std::vector<Permutation> out;
    enumerate_class(mu, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace genusdist
