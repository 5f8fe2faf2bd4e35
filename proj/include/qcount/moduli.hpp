#pragma once

#include <mutex>
#include <optional>
#include <string>

#include "qcount/hn.hpp"
#include "qcount/series.hpp"

namespace qcount {

/// One counting problem: quiver, stability, fixed slope, truncation box.
struct CountJob {
  Quiver quiver;
  Stability theta;
  SlopeValue mu;
  SeriesBox box;

  CountJob(Quiver q, Stability t, SlopeValue m, SeriesBox b);
  std::string label() const;
};

struct CountResult {
  DimVector alpha;
  QPolynomial a_ss;
  RatFunc h;
  QPolynomial r_ss;
  std::optional<QPolynomial> a_s;
};

/// Evaluator for a CountJob with lazy, shared caches (P forms, H map, HN
/// memo). Safe to query from several threads.
class CountEngine {
 public:
  explicit CountEngine(CountJob job);

  const CountJob& job() const { return job_; }
  const HNContext& ctx() const { return ctx_; }

  /// R_mu^ss(alpha, q) through the memoized recursion.
  RatFunc rss(const DimVector& alpha) const;
  const TruncatedSeries& p_partition_form() const;
  const TruncatedSeries& p_tuple_form() const;
  /// H(alpha, q) coefficients of log P; built from the tuple form.
  const std::map<DimVector, RatFunc>& h_map() const;
  RatFunc h(const DimVector& alpha) const;
  QPolynomial a_ss(const DimVector& alpha) const;
  QPolynomial a_stable(const DimVector& alpha,
                       TwistConvention convention = TwistConvention::neg_g_f) const;
  CountResult result(const DimVector& alpha, std::optional<TwistConvention> stable_convention) const;

 private:
  CountJob job_;
  HNContext ctx_;
  mutable std::mutex lock_;
  mutable std::optional<TruncatedSeries> p_partition_;
  mutable std::optional<TruncatedSeries> p_tuple_;
  mutable std::optional<std::map<DimVector, RatFunc>> h_;
  mutable std::map<TwistConvention, TruncatedSeries> stable_log_;
  const TruncatedSeries& stable_log_series(TwistConvention convention) const;
};

/// P(q, X) as the sum over partition tuples inside the box.
TruncatedSeries build_P_partition_form(const CountJob& job);

/// P(q, X) as the sum over tuples (alpha^1, ..., alpha^r) with alpha^r != 0.
TruncatedSeries build_P_tuple_form(const CountJob& job);

/// Coefficients of the formal log of P (constant term of P must be 1).
std::map<DimVector, RatFunc> h_coefficients(const TruncatedSeries& p);

/// A_mu^ss(alpha, q) = (q-1) sum_{d | gcd(alpha)} mobius(d)/d H(alpha/d, q^d).
QPolynomial a_ss(const CountJob& job, const DimVector& alpha);

struct ExpIdentityReport {
  bool equal = true;
  std::optional<DimVector> first_mismatch;
  RatFunc lhs, rhs;
};

/// Checks P = Exp( (1/(q-1)) sum A_mu^ss(alpha, q) X^alpha ) inside the box.
ExpIdentityReport verify_exp_identity(const CountJob& job);

/// A_mu^s(alpha, q) from the twisted-inverse identity: the series
/// sum R^ss/|GL| X^alpha is inverted under the twisted product and
/// (1-q) Log of the inverse is read off.
QPolynomial a_stable(const CountJob& job, const DimVector& alpha,
                     TwistConvention convention = TwistConvention::neg_g_f);

struct PositivityRow {
  std::string job_label;
  DimVector alpha;
  bool in_delta = false;
  bool integer_coefficients = false;
  bool nonnegative = false;
  QPolynomial poly;
};

struct PositivityReport {
  std::vector<PositivityRow> rows;
  bool all_integer = true;
  bool all_nonnegative = true;
};

/// Reports, never asserts: N[q] and Z[q] membership of a_ss per instance.
PositivityReport positivity_scan(const std::vector<CountJob>& jobs,
                                 const std::vector<std::vector<DimVector>>& alphas_per_job);

/// The theta = 0 specialization: every representation is semistable and a_ss
/// counts absolutely indecomposable classes.
QPolynomial kac_polynomial(const Quiver& q, const DimVector& alpha, const SeriesBox& box);

}  // namespace qcount
