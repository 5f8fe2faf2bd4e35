#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qcount {

/// Exact rational number with arbitrary-precision numerator and positive
/// denominator, always kept in lowest terms (GMP canonical form).
using BigRational = mpq_class;
using BigInteger = mpz_class;

inline BigRational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("zero divisor");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline BigRational make_rational(const BigInteger& num, const BigInteger& den) {
  if (den == 0) throw std::domain_error("zero divisor");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "n" or "n/d" in base 10.
inline BigRational rational_from_string(const std::string& text) {
  BigRational r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("invalid rational literal: " + text);
  if (r.get_den() == 0) throw std::domain_error("zero divisor");
  r.canonicalize();
  return r;
}

inline std::string rational_to_string(const BigRational& r) {
  return r.get_str();
}

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

inline BigInteger int_pow(const BigInteger& base, unsigned long exp) {
  BigInteger out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace qcount
