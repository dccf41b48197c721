#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>

#include "dualcx/errors.hpp"

namespace dualcx {

// Exact arbitrary-precision integer; all arithmetic in the library runs on
// these, never on floating point.
using Integer = boost::multiprecision::cpp_int;

inline Integer abs_int(const Integer& v) { return v < 0 ? Integer(-v) : v; }

inline Integer gcd_int(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

// Quotient of a/b rounded to nearest (|a - q*b| <= |b|/2); used during
// matrix reduction to keep remainders small.
inline Integer div_nearest(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (2 * abs_int(r) > abs_int(b)) {
    q += ((r < 0) == (b < 0)) ? 1 : -1;
  }
  return q;
}

// Nonnegative residue of a modulo m (m >= 1).
inline Integer mod_reduce(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

// Checked narrowing for serialization boundaries.
inline std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw Error("integer outside 64-bit range cannot be serialized");
  }
  return v.convert_to<std::int64_t>();
}

}  // namespace dualcx
