#pragma once

#include <optional>

#include "genusdist/poly.hpp"

namespace genusdist {

/// p divided by gcd(p, p'): same distinct roots, all simple. Returned monic.
ExactPoly square_free_part(const ExactPoly& p);

/// Number of distinct real roots of p in (lo, hi], counted exactly by a Sturm
/// chain on the square-free part. std::nullopt stands for an infinite
/// endpoint (lo -> -inf, hi -> +inf); infinite endpoints are resolved by
/// leading-coefficient sign, not sentinel values. The zero polynomial is a
/// domain error.
int sturm_count(const ExactPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi);

}  // namespace genusdist
