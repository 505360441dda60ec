#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qstat {

// Exact integer and rational scalars used throughout; counts and coefficients
// never round.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline double to_double(const BigInt& x) { return x.convert_to<double>(); }

}  // namespace qstat
