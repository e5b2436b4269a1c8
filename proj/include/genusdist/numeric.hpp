#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "genusdist/errors.hpp"

namespace genusdist {

// Exact arbitrary-precision integers and rationals; no machine-word overflow
// at any input size. Rat is always reduced with positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// High-precision decimals, used only for asymptotic parameters (they involve
// ln n); never part of an exact certificate.
using Dec = boost::multiprecision::cpp_dec_float_100;

Int factorial(int n);
Int binomial(int n, int k);

inline bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

/// Narrows an exact rational known to be integral; throws internal_error otherwise.
Int as_integer(const Rat& r, const char* context);

/// "p/q", or just "p" when q == 1.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& text);

}  // namespace genusdist
