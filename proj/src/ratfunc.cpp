#include "qcount/ratfunc.hpp"

#include <cassert>
#include <stdexcept>

namespace qcount {

RatFunc::RatFunc(QPolynomial num, QPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero divisor");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = QPolynomial::one();
    return;
  }
  QPolynomial g = QPolynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    auto [qn, rn] = QPolynomial::divmod(num_, g);
    auto [qd, rd] = QPolynomial::divmod(den_, g);
    assert(rn.is_zero() && rd.is_zero());
    num_ = std::move(qn);
    den_ = std::move(qd);
  }
  BigRational lc = den_.leading_coeff();
  if (lc != 1) {
    num_ /= lc;
    den_ /= lc;
  }
}

RatFunc RatFunc::q_power(int k) {
  if (k >= 0) return RatFunc(QPolynomial::q_power(k));
  return RatFunc(QPolynomial::one(), QPolynomial::q_power(-k));
}

RatFunc RatFunc::operator-() const {
  RatFunc out(*this);
  out.num_ = -out.num_;
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw std::domain_error("zero divisor");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  canonicalize();
  return *this;
}

std::string RatFunc::to_string() const {
  if (den_ == QPolynomial::one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFunc adams_subst(const RatFunc& f, int d) {
  if (d < 1) throw std::invalid_argument("adams_subst requires d >= 1");
  if (d == 1) return f;
  return RatFunc(f.num().substitute_power(d), f.den().substitute_power(d));
}

BigRational eval_prime_power(const RatFunc& f, const BigRational& q0) {
  BigRational d = f.den().eval(q0);
  if (d == 0) throw std::domain_error("evaluation at pole");
  return f.num().eval(q0) / d;
}

BigRational eval_prime_power(const RatFunc& f, long q0) {
  return eval_prime_power(f, BigRational(q0));
}

QPolynomial to_polynomial(const RatFunc& f) {
  if (f.den().degree() > 0) throw std::domain_error("not a polynomial: denominator " + f.den().to_string());
  // Canonical form has a monic denominator, so a constant denominator is 1.
  return f.num();
}

}  // namespace qcount
