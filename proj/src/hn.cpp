#include "qcount/hn.hpp"

#include <cassert>
#include <functional>
#include <stdexcept>

namespace qcount {

HNContext::HNContext(Quiver quiver, Stability theta, SlopeValue mu)
    : quiver_(std::move(quiver)), theta_(std::move(theta)), mu_(std::move(mu)) {
  if (theta_.size() != quiver_.n) throw std::invalid_argument("theta length must match vertex count");
}

HNContext HNContext::with_slope_from(Quiver quiver, Stability theta, const DimVector& target) {
  SlopeValue mu = slope(theta, target);
  return HNContext(std::move(quiver), std::move(theta), std::move(mu));
}

namespace {

// Visits nonzero vectors v <= bound componentwise in ascending lexicographic
// order. Returns false if the visitor aborts.
bool for_each_nonzero_below(const DimVector& bound,
                            const std::function<bool(const DimVector&)>& visit) {
  int n = bound.size();
  std::vector<int> v(static_cast<size_t>(n), 0);
  while (true) {
    int i = n - 1;
    while (i >= 0 && v[static_cast<size_t>(i)] == bound[i]) {
      v[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return true;
    v[static_cast<size_t>(i)]++;
    if (!visit(DimVector(v))) return false;
  }
}

}  // namespace

std::vector<std::vector<DimVector>> hn_decompositions(const DimVector& alpha,
                                                      const SlopeValue& mu,
                                                      const Stability& theta) {
  if (alpha.is_zero()) throw std::invalid_argument("hn_decompositions: zero dimension vector");
  std::vector<std::vector<DimVector>> out;
  std::vector<DimVector> current;

  // prefix = sum of pieces chosen so far; every proper prefix needs slope > mu.
  std::function<void(const DimVector&, const DimVector&)> rec =
      [&](const DimVector& prefix, const DimVector& remaining) {
        for_each_nonzero_below(remaining, [&](const DimVector& piece) {
          DimVector new_prefix = prefix + piece;
          if (new_prefix == alpha) {
            current.push_back(piece);
            out.push_back(current);
            current.pop_back();
          } else if (slope(theta, new_prefix) > mu) {
            current.push_back(piece);
            rec(new_prefix, alpha - new_prefix);
            current.pop_back();
          }
          return true;
        });
      };
  rec(DimVector::zeros(alpha.size()), alpha);
  return out;
}

namespace {

RatFunc normalized_plain_count(const Quiver& q, const DimVector& beta) {
  return RatFunc(rep_count(q, beta), gl_order(beta));
}

}  // namespace

RatFunc rss_direct(const HNContext& ctx, const DimVector& alpha) {
  if (alpha.is_zero()) return RatFunc(BigRational(1));
  if (!in_delta_plus(ctx.theta(), ctx.mu(), alpha)) return RatFunc();

  RatFunc sum;
  for (const auto& tuple : hn_decompositions(alpha, ctx.mu(), ctx.theta())) {
    size_t s = tuple.size();
    long long twist = 0;
    for (size_t i = 0; i < s; ++i)
      for (size_t j = i + 1; j < s; ++j)
        twist += euler_form(ctx.quiver(), tuple[j], tuple[i]);
    RatFunc term = RatFunc::q_power(static_cast<int>(-twist));
    for (const auto& piece : tuple) term *= normalized_plain_count(ctx.quiver(), piece);
    if (s % 2 == 0) term = -term;
    sum += term;
  }
  RatFunc result = sum * RatFunc(gl_order(alpha));
#ifndef NDEBUG
  assert(to_polynomial(result).integer_coefficients());
#endif
  return result;
}

RatFunc HNContext::normalized_rss(const DimVector& beta) const {
  if (beta.is_zero()) return RatFunc(BigRational(1));
  {
    std::lock_guard<std::mutex> hold(memo_lock_);
    auto it = memo_.find(beta);
    if (it != memo_.end()) return it->second;
  }
  RatFunc value = compute_normalized(beta);
  std::lock_guard<std::mutex> hold(memo_lock_);
  memo_.emplace(beta, value);  // first writer wins; recomputation is harmless
  return value;
}

RatFunc HNContext::compute_normalized(const DimVector& beta) const {
  // Harder-Narasimhan recursion: the plain count splits over HN types with
  // strictly decreasing slopes; subtract every type with s >= 2 strata.
  RatFunc result = normalized_plain_count(quiver_, beta);

  std::vector<DimVector> pieces;
  std::function<void(const DimVector&)> rec = [&](const DimVector& remaining) {
    for_each_nonzero_below(remaining, [&](const DimVector& piece) {
      if (!pieces.empty() && !(slope(theta_, piece) < slope(theta_, pieces.back())))
        return true;
      if (piece == remaining) {
        if (!pieces.empty()) {  // s = pieces.size() + 1 >= 2
          long long twist = 0;
          std::vector<DimVector> type(pieces);
          type.push_back(piece);
          for (size_t i = 0; i < type.size(); ++i)
            for (size_t j = i + 1; j < type.size(); ++j)
              twist += euler_form(quiver_, type[j], type[i]);
          RatFunc term = RatFunc::q_power(static_cast<int>(-twist));
          for (const auto& part : type) term *= normalized_rss(part);
          result -= term;
        }
      } else {
        pieces.push_back(piece);
        rec(remaining - piece);
        pieces.pop_back();
      }
      return true;
    });
  };
  rec(beta);
  return result;
}

RatFunc rss_recursive(const HNContext& ctx, const DimVector& alpha) {
  if (alpha.is_zero()) return RatFunc(BigRational(1));
  if (!in_delta_plus(ctx.theta(), ctx.mu(), alpha)) return RatFunc();
  return ctx.normalized_rss(alpha) * RatFunc(gl_order(alpha));
}

}  // namespace qcount
