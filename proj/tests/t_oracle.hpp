#pragma once

// High-precision Student t reference built on Boost.Math with 50-digit
// binary floats; independent of the library's continued-fraction code.

#include <boost/math/distributions/students_t.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace mofs::testing {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

inline double reference_t_cdf(double t, double df) {
  boost::math::students_t_distribution<HighPrecision> dist{HighPrecision(df)};
  return static_cast<double>(boost::math::cdf(dist, HighPrecision(t)));
}

inline double reference_ibeta(double a, double b, double x) {
  return static_cast<double>(boost::math::ibeta(HighPrecision(a), HighPrecision(b), HighPrecision(x)));
}

}  // namespace mofs::testing
