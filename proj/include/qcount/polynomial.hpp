#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcount/rational.hpp"

namespace qcount {

/// Dense univariate polynomial in q over BigRational, stored by ascending
/// degree with a nonzero leading coefficient (the zero polynomial has an
/// empty coefficient list).
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(const BigRational& constant);
  explicit QPolynomial(std::vector<BigRational> coeffs);

  static QPolynomial monomial(const BigRational& coeff, int degree);
  /// q^k for k >= 0.
  static QPolynomial q_power(int k);
  static QPolynomial one() { return QPolynomial(BigRational(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigRational coeff(int k) const;
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  const BigRational& leading_coeff() const;

  bool integer_coefficients() const;
  bool nonnegative_integer_coefficients() const;

  QPolynomial operator-() const;
  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);
  QPolynomial& operator*=(const BigRational& scalar);
  QPolynomial& operator/=(const BigRational& scalar);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  friend QPolynomial operator*(QPolynomial a, const BigRational& s) { return a *= s; }
  friend QPolynomial operator*(const BigRational& s, QPolynomial a) { return a *= s; }

  bool operator==(const QPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

  /// Substitution q -> q^d for d >= 1.
  QPolynomial substitute_power(int d) const;
  BigRational eval(const BigRational& x) const;
  QPolynomial monic() const;

  /// Euclidean division: returns {quotient, remainder}, divisor must be nonzero.
  static std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a,
                                                    const QPolynomial& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static QPolynomial gcd(QPolynomial a, QPolynomial b);

  /// Human-readable form in descending powers, e.g. "q^2 - 1".
  std::string to_string() const;
  /// LaTeX form in descending powers, e.g. "q^{2} - 1".
  std::string to_latex() const;

 private:
  void normalize();
  std::vector<BigRational> coeffs_;
};

}  // namespace qcount
