#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dgla {

// All arithmetic in this library is exact: rationals with arbitrary-precision
// integer parts. No floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
inline Rational rat_parse(const std::string& s) {
  mpq_class r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (sgn(r.get_den()) == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace dgla
