#include "genusdist/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "genusdist/poly.hpp"

namespace genusdist {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be non-increasing");
        }
        weight_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        int value = 0;
        const auto* first = text.data() + pos;
        const auto* last = text.data() + next;
        const auto res = std::from_chars(first, last, value);
        if (res.ec != std::errc{} || res.ptr != last) {
            throw std::invalid_argument("malformed partition: \"" + std::string(text) + "\"");
        }
        parts.push_back(value);
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
    std::vector<std::pair<int, int>> out;
    for (int p : parts_) {
        if (!out.empty() && out.back().first == p) {
            ++out.back().second;
        } else {
            out.emplace_back(p, 1);
        }
    }
    return out;
}

bool Partition::is_hook() const {
    if (parts_.empty()) return false;
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        if (parts_[i] != 1) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& out, const Partition& p) { return out << p.to_string(); }

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> p{n};
    for (;;) {
        out.push_back(Partition(p));
        // Next in reverse-lex: decrement the rightmost part above 1 and
        // redistribute the freed units greedily.
        int k = static_cast<int>(p.size()) - 1;
        int spare = 0;
        while (k >= 0 && p[k] == 1) {
            ++spare;
            --k;
        }
        if (k < 0) break;
        p[k] -= 1;
        ++spare;
        p.resize(k + 1);
        const int cap = p[k];
        while (spare > 0) {
            const int take = std::min(cap, spare);
            p.push_back(take);
            spare -= take;
        }
    }
    return out;
}

Int conjugacy_class_size(const Partition& lambda) {
    Int denom = 1;
    for (const auto& [value, count] : lambda.multiplicities()) {
        for (int j = 0; j < count; ++j) denom *= value;
        denom *= factorial(count);
    }
    return factorial(lambda.weight()) / denom;
}

Partition hook_partition(int n, int a) {
    if (n < 1) throw std::domain_error("hook_partition: n must be positive");
    if (a < 0 || a > n - 1) throw std::domain_error("hook_partition: a out of [0, n-1]");
    std::vector<int> parts{n - a};
    parts.insert(parts.end(), a, 1);
    return Partition(std::move(parts));
}

Int dimension(const Partition& theta) {
    const auto parts = theta.parts();
    const int rows = theta.length();
    if (rows == 0) return 1;
    // Column lengths (conjugate partition).
    std::vector<int> col(parts[0], 0);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < parts[r]; ++c) ++col[c];
    }
    Int hooks = 1;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < parts[r]; ++c) {
            const int arm = parts[r] - c - 1;
            const int leg = col[c] - r - 1;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(theta.weight()) / hooks;
}

ExactPoly content_polynomial(const Partition& theta) {
    ExactPoly h = ExactPoly::constant(Rat(1));
    const auto parts = theta.parts();
    for (int r = 0; r < theta.length(); ++r) {
        for (int c = 0; c < parts[r]; ++c) {
            h = h * ExactPoly{Rat(c - r), Rat(1)};
        }
    }
    return h;
}

}  // namespace genusdist
