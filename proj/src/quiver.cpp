#include "qcount/quiver.hpp"

#include <numeric>
#include <stdexcept>

namespace qcount {

DimVector::DimVector(std::vector<int> c) : comp(std::move(c)) {
  for (int x : comp)
    if (x < 0) throw std::invalid_argument("dimension vector components must be >= 0");
}

long long DimVector::ht() const {
  long long s = 0;
  for (int x : comp) s += x;
  return s;
}

bool DimVector::is_zero() const {
  for (int x : comp)
    if (x != 0) return false;
  return true;
}

DimVector DimVector::operator+(const DimVector& rhs) const {
  if (comp.size() != rhs.comp.size()) throw std::invalid_argument("dimension mismatch");
  DimVector out(*this);
  for (size_t i = 0; i < comp.size(); ++i) out.comp[i] += rhs.comp[i];
  return out;
}

DimVector DimVector::operator-(const DimVector& rhs) const {
  if (comp.size() != rhs.comp.size()) throw std::invalid_argument("dimension mismatch");
  DimVector out(*this);
  for (size_t i = 0; i < comp.size(); ++i) {
    out.comp[i] -= rhs.comp[i];
    if (out.comp[i] < 0) throw std::invalid_argument("negative dimension vector difference");
  }
  return out;
}

DimVector DimVector::scaled(int k) const {
  if (k < 0) throw std::invalid_argument("negative scale");
  DimVector out(*this);
  for (auto& x : out.comp) x *= k;
  return out;
}

std::optional<DimVector> DimVector::divided(int k) const {
  DimVector out(*this);
  for (auto& x : out.comp) {
    if (x % k != 0) return std::nullopt;
    x /= k;
  }
  return out;
}

bool leq_componentwise(const DimVector& a, const DimVector& b) {
  if (a.comp.size() != b.comp.size()) return false;
  for (size_t i = 0; i < a.comp.size(); ++i)
    if (a.comp[i] > b.comp[i]) return false;
  return true;
}

int component_gcd(const DimVector& a) {
  int g = 0;
  for (int x : a.comp) g = std::gcd(g, x);
  return g;
}

long long Stability::operator()(const DimVector& alpha) const {
  if (alpha.size() != size()) throw std::invalid_argument("dimension mismatch");
  long long s = 0;
  for (int i = 0; i < size(); ++i) s += static_cast<long long>(weights[static_cast<size_t>(i)]) * alpha[i];
  return s;
}

Quiver::Quiver(int n_, std::vector<std::vector<int>> arrows_) : n(n_), arrows(std::move(arrows_)) {
  if (n < 1) throw std::invalid_argument("quiver needs at least one vertex");
  if (static_cast<int>(arrows.size()) != n) throw std::invalid_argument("arrows must be n x n");
  for (const auto& row : arrows) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("arrows must be n x n");
    for (int a : row)
      if (a < 0) throw std::invalid_argument("arrow counts must be >= 0");
  }
}

std::vector<std::pair<int, int>> Quiver::arrow_list() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < arrows[static_cast<size_t>(i)][static_cast<size_t>(j)]; ++k)
        out.emplace_back(i, j);
  return out;
}

long long Quiver::total_entries(const DimVector& alpha) const {
  long long s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s += static_cast<long long>(arrows[static_cast<size_t>(i)][static_cast<size_t>(j)]) * alpha[i] * alpha[j];
  return s;
}

long long euler_form(const Quiver& q, const std::vector<int>& a, const std::vector<int>& b) {
  if (static_cast<int>(a.size()) != q.n || static_cast<int>(b.size()) != q.n)
    throw std::invalid_argument("dimension mismatch");
  long long s = 0;
  for (int i = 0; i < q.n; ++i) s += static_cast<long long>(a[static_cast<size_t>(i)]) * b[static_cast<size_t>(i)];
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j)
      s -= static_cast<long long>(q.arrows[static_cast<size_t>(i)][static_cast<size_t>(j)]) *
           a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
  return s;
}

long long euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  return euler_form(q, a.comp, b.comp);
}

QPolynomial rep_count(const Quiver& q, const DimVector& alpha) {
  long long e = q.total_entries(alpha);
  return QPolynomial::q_power(static_cast<int>(e));
}

QPolynomial gl_order(const DimVector& alpha) {
  QPolynomial out = QPolynomial::one();
  for (int i = 0; i < alpha.size(); ++i) {
    int d = alpha[i];
    for (int k = 0; k < d; ++k)
      out *= QPolynomial::q_power(d) - QPolynomial::q_power(k);
  }
  return out;
}

SlopeValue slope(const Stability& theta, const DimVector& alpha) {
  if (alpha.is_zero()) throw std::domain_error("slope of zero vector");
  return make_rational(BigInteger(static_cast<long>(theta(alpha))), BigInteger(static_cast<long>(alpha.ht())));
}

bool in_delta_plus(const Stability& theta, const SlopeValue& mu, const DimVector& alpha) {
  // theta(alpha) = mu * ht(alpha), exactly; components are >= 0 by construction.
  return BigRational(static_cast<long>(theta(alpha))) == mu * BigRational(static_cast<long>(alpha.ht()));
}

}  // namespace qcount
