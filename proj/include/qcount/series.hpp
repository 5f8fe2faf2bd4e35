#pragma once

#include <map>
#include <string>

#include "qcount/quiver.hpp"
#include "qcount/ratfunc.hpp"

namespace qcount {

/// Componentwise truncation box: coefficients are kept for every alpha with
/// alpha <= bound.
struct SeriesBox {
  DimVector bound;

  SeriesBox() = default;
  explicit SeriesBox(DimVector b) : bound(std::move(b)) {}
  int vars() const { return bound.size(); }
  int max_component() const;
  bool contains(const DimVector& alpha) const { return leq_componentwise(alpha, bound); }
  bool operator==(const SeriesBox&) const = default;
};

/// Finitely supported truncated multivariate power series over RatFunc.
/// Absent keys are zero; zero coefficients are never stored.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(SeriesBox box) : box_(std::move(box)) {}

  static TruncatedSeries one(const SeriesBox& box);
  static TruncatedSeries monomial(const SeriesBox& box, const DimVector& alpha,
                                  const RatFunc& coeff);

  const SeriesBox& box() const { return box_; }
  const std::map<DimVector, RatFunc>& coeffs() const { return coeffs_; }

  RatFunc coeff(const DimVector& alpha) const;
  RatFunc constant_term() const { return coeff(DimVector::zeros(box_.vars())); }
  void set_coeff(const DimVector& alpha, const RatFunc& value);
  void add_to(const DimVector& alpha, const RatFunc& value);

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const RatFunc& scalar);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const RatFunc& s) { return a *= s; }
  friend TruncatedSeries operator*(const RatFunc& s, TruncatedSeries a) { return a *= s; }

  bool operator==(const TruncatedSeries& rhs) const {
    return box_ == rhs.box_ && coeffs_ == rhs.coeffs_;
  }

  /// Restriction to a componentwise smaller box.
  TruncatedSeries restricted_to(const SeriesBox& smaller) const;

  std::string to_string() const;

 private:
  SeriesBox box_;
  std::map<DimVector, RatFunc> coeffs_;
};

/// Cauchy product truncated to the common box.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Twist exponent choice for the product X^beta o X^gamma = q^t X^{beta+gamma}
/// ("f" is the first factor's exponent beta, "g" the second's gamma).
enum class TwistConvention { neg_g_f, neg_f_g, g_f, f_g };

const char* to_string(TwistConvention c);
TwistConvention twist_convention_from_string(const std::string& name);

/// Product with monomial rule X^beta o X^gamma = q^{t(beta,gamma)} X^{beta+gamma},
/// t drawn from the quiver's Euler form per the convention.
TruncatedSeries twisted_mul(const TruncatedSeries& a, const TruncatedSeries& b,
                            const Quiver& q, TwistConvention convention = TwistConvention::neg_g_f);

/// log(f) = sum (-1)^{i-1} (f-1)^i / i; requires constant term 1.
TruncatedSeries formal_log(const TruncatedSeries& f);

/// exp(f) = sum f^i / i!; requires constant term 0.
TruncatedSeries formal_exp(const TruncatedSeries& f);

/// psi_k: q -> q^k and X_i -> X_i^k, truncated to the box.
TruncatedSeries adams_psi(const TruncatedSeries& f, int k);

/// Exp(f) = exp(sum_{k>=1} psi_k(f)/k); requires constant term 0.
TruncatedSeries big_exp(const TruncatedSeries& f);

/// Log(f) = sum_{k>=1} (mobius(k)/k) psi_k(log f); requires constant term 1.
TruncatedSeries big_log(const TruncatedSeries& f);

/// Classical Mobius function.
int mobius(long k);

}  // namespace qcount
