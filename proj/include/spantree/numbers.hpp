#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace spantree {

// Exact arithmetic everywhere: tree counts grow like n^(n-2), so every
// count, matrix entry and polynomial coefficient is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace spantree
