#pragma once

#include <string>

#include "qcount/polynomial.hpp"

namespace qcount {

/// Exact rational function in q, kept in canonical form: gcd(num, den) = 1
/// and den monic. Equality is structural.
class RatFunc {
 public:
  RatFunc() : den_(QPolynomial::one()) {}
  RatFunc(const BigRational& constant) : num_(QPolynomial(constant)), den_(QPolynomial::one()) {}
  RatFunc(QPolynomial num) : num_(std::move(num)), den_(QPolynomial::one()) {}
  RatFunc(QPolynomial num, QPolynomial den);

  /// q^k, any integer k (negative k gives 1/q^{-k}).
  static RatFunc q_power(int k);

  const QPolynomial& num() const { return num_; }
  const QPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  bool operator==(const RatFunc& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }

  std::string to_string() const;

 private:
  void canonicalize();
  QPolynomial num_;
  QPolynomial den_;
};

/// Substitution q -> q^d, d >= 1.
RatFunc adams_subst(const RatFunc& f, int d);

/// Exact value f(q0); throws "evaluation at pole" if den(q0) = 0.
BigRational eval_prime_power(const RatFunc& f, long q0);
BigRational eval_prime_power(const RatFunc& f, const BigRational& q0);

/// Returns the polynomial equal to f; throws "not a polynomial" otherwise.
QPolynomial to_polynomial(const RatFunc& f);

}  // namespace qcount
