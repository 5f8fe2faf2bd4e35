#include "qcount/polynomial.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace qcount {

QPolynomial::QPolynomial(const BigRational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPolynomial::QPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void QPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial QPolynomial::monomial(const BigRational& coeff, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  if (coeff == 0) return {};
  QPolynomial p;
  p.coeffs_.assign(static_cast<size_t>(degree) + 1, BigRational(0));
  p.coeffs_.back() = coeff;
  return p;
}

QPolynomial QPolynomial::q_power(int k) { return monomial(BigRational(1), k); }

BigRational QPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigRational(0);
  return coeffs_[static_cast<size_t>(k)];
}

const BigRational& QPolynomial::leading_coeff() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

bool QPolynomial::integer_coefficients() const {
  for (const auto& c : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

bool QPolynomial::nonnegative_integer_coefficients() const {
  for (const auto& c : coeffs_)
    if (!is_integer(c) || c < 0) return false;
  return true;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigRational(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigRational(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigRational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const BigRational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

QPolynomial& QPolynomial::operator/=(const BigRational& scalar) {
  if (scalar == 0) throw std::domain_error("zero divisor");
  for (auto& c : coeffs_) c /= scalar;
  return *this;
}

QPolynomial QPolynomial::substitute_power(int d) const {
  if (d < 1) throw std::invalid_argument("substitution power must be >= 1");
  if (d == 1 || is_zero()) return *this;
  std::vector<BigRational> out(static_cast<size_t>(degree()) * d + 1, BigRational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i * d] = coeffs_[i];
  return QPolynomial(std::move(out));
}

BigRational QPolynomial::eval(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPolynomial QPolynomial::monic() const {
  if (is_zero()) return {};
  QPolynomial out(*this);
  out /= leading_coeff();
  return out;
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divmod(const QPolynomial& a,
                                                        const QPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("zero divisor");
  QPolynomial quot;
  QPolynomial rem(a);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    BigRational factor = rem.leading_coeff() / b.leading_coeff();
    int shift = rem.degree() - b.degree();
    QPolynomial t = monomial(factor, shift);
    quot += t;
    rem -= t * b;
  }
  return {quot, rem};
}

QPolynomial QPolynomial::gcd(QPolynomial a, QPolynomial b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // Monic remainder sequence keeps coefficients tame over Q.
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    QPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? QPolynomial() : r.monic();
  }
  return a;
}

namespace {

void append_term(std::ostringstream& os, bool first, const BigRational& c, int deg,
                 bool latex) {
  BigRational abs_c = c < 0 ? BigRational(-c) : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  bool unit = abs_c == 1 && deg > 0;
  if (!unit) {
    bool frac = !is_integer(abs_c);
    if (frac && !latex) os << "(" << rational_to_string(abs_c) << ")";
    else if (frac) os << "\\tfrac{" << abs_c.get_num().get_str() << "}{" << abs_c.get_den().get_str() << "}";
    else os << abs_c.get_str();
    if (deg > 0 && !latex) os << "*";
  }
  if (deg == 1) os << "q";
  else if (deg > 1) os << (latex ? "q^{" : "q^") << deg << (latex ? "}" : "");
}

std::string render(const QPolynomial& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    BigRational c = p.coeff(k);
    if (c == 0) continue;
    append_term(os, first, c, k, latex);
    first = false;
  }
  return os.str();
}

}  // namespace

std::string QPolynomial::to_string() const { return render(*this, false); }
std::string QPolynomial::to_latex() const { return render(*this, true); }

}  // namespace qcount
