#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace inddom {

// Exact rational number. All arithmetic in the library goes through this
// type; nothing is ever rounded.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Lowest-terms rendering: "p/q", or just "p" when q == 1.
inline std::string rat_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rat_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  if (r.get_den() <= 0) throw std::invalid_argument("bad rational: " + s);
  return r;
}

// Largest integer <= r.
inline mpz_class rat_floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

// Fractional part {r} = r - floor(r), always in [0, 1).
inline Rational rat_frac(const Rational& r) {
  Rational f = r - Rational(rat_floor(r));
  f.canonicalize();
  return f;
}

inline bool rat_is_integer(const Rational& r) { return r.get_den() == 1; }

using RationalVector = std::vector<Rational>;

}  // namespace inddom
