#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace qprove {

// Exact arithmetic: polynomial values grow past any machine word even at
// desk scale (x^10 at n=100), so values that leave the truncated box are
// kept as big integers and observable coefficients as exact rationals.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

// Occupation numbers, witnesses and proofs are all tuples (n_1,...,n_k).
using Tuple = std::vector<std::uint64_t>;

inline bool fits_uint64(const BigInt& v) {
  return v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max());
}

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

inline double to_double(const Rational& v) { return v.convert_to<double>(); }

inline std::string tuple_to_string(const Tuple& t) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out << ',';
    out << t[i];
  }
  out << ')';
  return out.str();
}

}  // namespace qprove
