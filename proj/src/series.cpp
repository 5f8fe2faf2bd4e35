#include "qcount/series.hpp"

#include <sstream>
#include <stdexcept>

namespace qcount {

int SeriesBox::max_component() const {
  int m = 0;
  for (int i = 0; i < bound.size(); ++i) m = std::max(m, bound[i]);
  return m;
}

TruncatedSeries TruncatedSeries::one(const SeriesBox& box) {
  TruncatedSeries s(box);
  s.set_coeff(DimVector::zeros(box.vars()), RatFunc(BigRational(1)));
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const SeriesBox& box, const DimVector& alpha,
                                          const RatFunc& coeff) {
  TruncatedSeries s(box);
  s.set_coeff(alpha, coeff);
  return s;
}

RatFunc TruncatedSeries::coeff(const DimVector& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? RatFunc() : it->second;
}

void TruncatedSeries::set_coeff(const DimVector& alpha, const RatFunc& value) {
  if (!box_.contains(alpha)) throw std::invalid_argument("coefficient outside series box");
  if (value.is_zero())
    coeffs_.erase(alpha);
  else
    coeffs_[alpha] = value;
}

void TruncatedSeries::add_to(const DimVector& alpha, const RatFunc& value) {
  if (!box_.contains(alpha)) throw std::invalid_argument("coefficient outside series box");
  auto it = coeffs_.find(alpha);
  if (it == coeffs_.end()) {
    if (!value.is_zero()) coeffs_.emplace(alpha, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) coeffs_.erase(it);
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out(box_);
  for (const auto& [k, v] : coeffs_) out.coeffs_.emplace(k, -v);
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  if (!(box_ == rhs.box_)) throw std::invalid_argument("box mismatch");
  for (const auto& [k, v] : rhs.coeffs_) add_to(k, v);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  if (!(box_ == rhs.box_)) throw std::invalid_argument("box mismatch");
  for (const auto& [k, v] : rhs.coeffs_) add_to(k, -v);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const RatFunc& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, v] : coeffs_) v *= scalar;
  return *this;
}

TruncatedSeries TruncatedSeries::restricted_to(const SeriesBox& smaller) const {
  if (!box_.contains(smaller.bound))
    throw std::invalid_argument("restriction box must be inside the series box");
  TruncatedSeries out(smaller);
  for (const auto& [k, v] : coeffs_)
    if (smaller.contains(k)) out.coeffs_.emplace(k, v);
  return out;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << v.to_string() << "] X^(";
    for (int i = 0; i < k.size(); ++i) {
      if (i) os << ",";
      os << k[i];
    }
    os << ")";
  }
  return first ? "0" : os.str();
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!(a.box() == b.box())) throw std::invalid_argument("box mismatch");
  TruncatedSeries out(a.box());
  for (const auto& [beta, fb] : a.coeffs())
    for (const auto& [gamma, fg] : b.coeffs()) {
      DimVector sum = beta + gamma;
      if (!a.box().contains(sum)) continue;
      out.add_to(sum, fb * fg);
    }
  return out;
}

const char* to_string(TwistConvention c) {
  switch (c) {
    case TwistConvention::neg_g_f: return "neg-g-f";
    case TwistConvention::neg_f_g: return "neg-f-g";
    case TwistConvention::g_f: return "g-f";
    case TwistConvention::f_g: return "f-g";
  }
  return "?";
}

TwistConvention twist_convention_from_string(const std::string& name) {
  if (name == "neg-g-f") return TwistConvention::neg_g_f;
  if (name == "neg-f-g") return TwistConvention::neg_f_g;
  if (name == "g-f") return TwistConvention::g_f;
  if (name == "f-g") return TwistConvention::f_g;
  throw std::invalid_argument("unknown twist convention: " + name);
}

TruncatedSeries twisted_mul(const TruncatedSeries& a, const TruncatedSeries& b,
                            const Quiver& q, TwistConvention convention) {
  if (!(a.box() == b.box())) throw std::invalid_argument("box mismatch");
  TruncatedSeries out(a.box());
  for (const auto& [beta, fb] : a.coeffs())
    for (const auto& [gamma, fg] : b.coeffs()) {
      DimVector sum = beta + gamma;
      if (!a.box().contains(sum)) continue;
      long long t = 0;
      switch (convention) {
        case TwistConvention::neg_g_f: t = -euler_form(q, gamma, beta); break;
        case TwistConvention::neg_f_g: t = -euler_form(q, beta, gamma); break;
        case TwistConvention::g_f: t = euler_form(q, gamma, beta); break;
        case TwistConvention::f_g: t = euler_form(q, beta, gamma); break;
      }
      out.add_to(sum, RatFunc::q_power(static_cast<int>(t)) * fb * fg);
    }
  return out;
}

TruncatedSeries formal_log(const TruncatedSeries& f) {
  if (!(f.constant_term() == RatFunc(BigRational(1))))
    throw std::domain_error("log requires unit constant term");
  TruncatedSeries x = f;
  x.add_to(DimVector::zeros(f.box().vars()), RatFunc(BigRational(-1)));
  // (f-1)^i vanishes once i exceeds the total height of the box.
  long long max_i = f.box().bound.ht();
  TruncatedSeries out(f.box());
  TruncatedSeries power = TruncatedSeries::one(f.box());
  for (long long i = 1; i <= max_i; ++i) {
    power = series_mul(power, x);
    if (power.coeffs().empty()) break;
    RatFunc c = RatFunc(make_rational(i % 2 == 1 ? 1 : -1, i));
    out += power * c;
  }
  return out;
}

TruncatedSeries formal_exp(const TruncatedSeries& f) {
  if (!f.constant_term().is_zero())
    throw std::domain_error("exp requires zero constant term");
  long long max_i = f.box().bound.ht();
  TruncatedSeries out = TruncatedSeries::one(f.box());
  TruncatedSeries power = TruncatedSeries::one(f.box());
  BigInteger factorial(1);
  for (long long i = 1; i <= max_i; ++i) {
    power = series_mul(power, f);
    if (power.coeffs().empty()) break;
    factorial *= static_cast<long>(i);
    out += power * RatFunc(make_rational(BigInteger(1), factorial));
  }
  return out;
}

TruncatedSeries adams_psi(const TruncatedSeries& f, int k) {
  if (k < 1) throw std::invalid_argument("adams_psi requires k >= 1");
  if (k == 1) return f;
  TruncatedSeries out(f.box());
  for (const auto& [alpha, c] : f.coeffs()) {
    DimVector stretched = alpha.scaled(k);
    if (!f.box().contains(stretched)) continue;
    out.add_to(stretched, adams_subst(c, k));
  }
  return out;
}

TruncatedSeries big_exp(const TruncatedSeries& f) {
  if (!f.constant_term().is_zero())
    throw std::domain_error("Exp requires zero constant term");
  // psi_k only lands inside the box for k up to the largest box component.
  int max_k = f.box().max_component();
  TruncatedSeries inner(f.box());
  for (int k = 1; k <= max_k; ++k)
    inner += adams_psi(f, k) * RatFunc(make_rational(1, k));
  return formal_exp(inner);
}

TruncatedSeries big_log(const TruncatedSeries& f) {
  if (!(f.constant_term() == RatFunc(BigRational(1))))
    throw std::domain_error("Log requires unit constant term");
  TruncatedSeries lg = formal_log(f);
  int max_k = f.box().max_component();
  TruncatedSeries out(f.box());
  for (int k = 1; k <= max_k; ++k) {
    int mu = mobius(k);
    if (mu == 0) continue;
    out += adams_psi(lg, k) * RatFunc(make_rational(mu, k));
  }
  return out;
}

int mobius(long k) {
  if (k < 1) throw std::invalid_argument("mobius requires k >= 1");
  int primes = 0;
  for (long p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      k /= p;
      if (k % p == 0) return 0;
      ++primes;
    }
  }
  if (k > 1) ++primes;
  return primes % 2 == 0 ? 1 : -1;
}

}  // namespace qcount
