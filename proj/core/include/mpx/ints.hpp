#ifndef MPX_INTS_HPP
#define MPX_INTS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace mpx {

// Exact arithmetic everywhere: torsion coefficients and factorial-sized
// sums must never be computed in floating point or overflow.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace mpx

#endif
