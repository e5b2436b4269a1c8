#include "genusdist/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace genusdist {

namespace {

using PartsPair = std::pair<std::vector<int>, std::vector<int>>;

// Per-process memo table for chi^theta_mu. Lookups and inserts hold the
// lock; recursion happens outside it, so a value may rarely be computed
// twice under contention, with identical results.
class CharacterCache {
public:
    bool lookup(const PartsPair& key, Int& out) const {
        std::lock_guard lock(mutex_);
        const auto it = table_.find(key);
        if (it == table_.end()) return false;
        out = it->second;
        return true;
    }

    void store(PartsPair key, const Int& value) {
        std::lock_guard lock(mutex_);
        table_.emplace(std::move(key), value);
    }

private:
    mutable std::mutex mutex_;
    std::map<PartsPair, Int> table_;
};

CharacterCache& cache() {
    static CharacterCache c;
    return c;
}

std::vector<int> beta_set(std::span<const int> parts) {
    const int l = static_cast<int>(parts.size());
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = parts[i] + (l - 1 - i);
    return beta;  // strictly decreasing
}

std::vector<int> partition_from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    const int l = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) {
        const int p = beta[i] - (l - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return parts;
}

Int mn_recurse(const std::vector<int>& theta, const std::vector<int>& mu) {
    if (mu.empty()) return 1;

    PartsPair key{theta, mu};
    Int memo;
    if (cache().lookup(key, memo)) return memo;

    const int strip = mu.front();
    const std::vector<int> mu_rest(mu.begin() + 1, mu.end());
    const std::vector<int> beta = beta_set(theta);

    Int sum = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - strip;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        // Strip height = rows spanned - 1 = beta entries jumped over.
        int height = 0;
        for (int b : beta) {
            if (target < b && b < beta[i]) ++height;
        }
        std::vector<int> nbeta = beta;
        nbeta[i] = target;
        const Int sub = mn_recurse(partition_from_beta(std::move(nbeta)), mu_rest);
        sum += (height % 2 == 0) ? sub : -sub;
    }

    cache().store(std::move(key), sum);
    return sum;
}

}  // namespace

Int mn_character(const Partition& theta, const Partition& mu) {
    if (theta.weight() != mu.weight()) {
        throw std::invalid_argument("mn_character: partitions of different weights");
    }
    return mn_recurse(std::vector<int>(theta.parts().begin(), theta.parts().end()),
                      std::vector<int>(mu.parts().begin(), mu.parts().end()));
}

ExactPoly r_poly(int n, const Partition& lambda) {
    if (n < 1) throw std::domain_error("r_poly: n must be positive");
    if (lambda.weight() != n) throw std::invalid_argument("r_poly: lambda must be a partition of n");

    ExactPoly numerator = ExactPoly::constant(Rat(1));
    for (int part : lambda.parts()) {
        ExactPoly factor = ExactPoly::monomial(part, Rat(-1));
        factor += ExactPoly::constant(Rat(1));
        numerator = numerator * factor;
    }
    const ExactPoly one_minus_z{Rat(1), Rat(-1)};
    ExactPoly r = exact_div(numerator, one_minus_z, "r_poly");

    // Constant term 1 (trivial character); top coefficient (-1)^{l-1}, the
    // sign forced by chi^{[1^n]}_lambda = (-1)^{n-l}.
    const Rat top_expected = (lambda.length() % 2 == 1) ? Rat(1) : Rat(-1);
    if (r.degree() != n - 1 || r.coeff(0) != 1 || r.coeff(n - 1) != top_expected) {
        throw internal_error("r_poly: degree or boundary coefficients wrong");
    }
    for (const Rat& c : r.coeffs()) {
        if (!is_integer(c)) throw internal_error("r_poly: non-integer coefficient");
    }
    // 1 must be a root of multiplicity exactly l(lambda) - 1.
    ExactPoly probe = r;
    int mult = 0;
    while (probe.evaluate(Rat(1)) == 0) {
        probe = exact_div(probe, ExactPoly{Rat(-1), Rat(1)}, "r_poly root multiplicity");
        ++mult;
    }
    if (mult != lambda.length() - 1) {
        throw internal_error("r_poly: multiplicity of root 1 is not l(lambda)-1");
    }
    return r;
}

Int hook_character(int n, int a, const Partition& lambda) {
    if (a < 0 || a > n - 1) throw std::domain_error("hook_character: a out of [0, n-1]");
    const ExactPoly r = r_poly(n, lambda);
    const Int coeff = as_integer(r.coeff(a), "hook_character");
    return (a % 2 == 0) ? coeff : -coeff;
}

HookCharVector hook_characters(int n, const Partition& lambda) {
    const ExactPoly r = r_poly(n, lambda);
    HookCharVector out{n, lambda, {}};
    out.values.reserve(n);
    for (int a = 0; a < n; ++a) {
        const Int coeff = as_integer(r.coeff(a), "hook_characters");
        out.values.push_back(a % 2 == 0 ? coeff : -coeff);
    }
    return out;
}

Int frobenius_count(std::span<const Partition> cycle_types) {
    if (cycle_types.empty()) throw std::invalid_argument("frobenius_count: need k >= 1 classes");
    const int n = cycle_types.front().weight();
    if (n < 1) throw std::invalid_argument("frobenius_count: weight must be positive");
    for (const Partition& mu : cycle_types) {
        if (mu.weight() != n) throw std::invalid_argument("frobenius_count: weight mismatch");
    }

    const int k = static_cast<int>(cycle_types.size());
    Rat sum(0);
    for (const Partition& theta : partitions_of(n)) {
        Int prod = 1;
        bool zero = false;
        for (const Partition& mu : cycle_types) {
            const Int chi = mn_character(theta, mu);
            if (chi == 0) {
                zero = true;
                break;
            }
            prod *= chi;
        }
        if (zero) continue;
        const Int dim = dimension(theta);
        // (f^theta)^{2-k} with k >= 1: exponent may be negative.
        Rat term(prod);
        if (k >= 2) {
            Int dpow = 1;
            for (int i = 0; i < k - 2; ++i) dpow *= dim;
            term /= Rat(dpow);
        } else {
            term *= Rat(dim);
        }
        sum += term;
    }

    Rat result = sum / Rat(factorial(n));
    for (const Partition& mu : cycle_types) result *= Rat(conjugacy_class_size(mu));

    const Int count = as_integer(result, "frobenius_count");
    if (count < 0) throw internal_error("frobenius_count: negative count");
    return count;
}

}  // namespace genusdist
