#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace narycat {

// All counts in this library are exact; cpp_int is plenty fast at the scales
// we sweep (the largest value in any default range fits in ~64 bits, but the
// API promises exactness for any n, so no fixed-width shortcut).
using BigInt = boost::multiprecision::cpp_int;

} // namespace narycat
