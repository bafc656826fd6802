#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace motzeta {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator by the GMP backend.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline std::string to_string(const Rational& q) { return q.str(); }

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace motzeta
