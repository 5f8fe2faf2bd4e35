#pragma once

#include <map>
#include <mutex>

#include "qcount/quiver.hpp"
#include "qcount/ratfunc.hpp"

namespace qcount {

/// Fixed (quiver, theta, mu) for semistable counting. The memo caches the
/// normalized count R^ss(beta) / |GL(beta)| at beta's own slope; entries are
/// write-once.
class HNContext {
 public:
  HNContext(Quiver quiver, Stability theta, SlopeValue mu);
  static HNContext with_slope_from(Quiver quiver, Stability theta, const DimVector& target);

  const Quiver& quiver() const { return quiver_; }
  const Stability& theta() const { return theta_; }
  const SlopeValue& mu() const { return mu_; }

  /// Memoized R^ss_{mu(beta)}(beta) / |GL(beta)| for nonzero beta.
  RatFunc normalized_rss(const DimVector& beta) const;

 private:
  RatFunc compute_normalized(const DimVector& beta) const;

  Quiver quiver_;
  Stability theta_;
  SlopeValue mu_;
  mutable std::map<DimVector, RatFunc> memo_;
  mutable std::mutex memo_lock_;
};

/// All ordered tuples of nonzero dimension vectors summing to alpha whose
/// proper prefix sums all have slope > mu. Tuples come out in lexicographic
/// order of their prefix vectors; the singleton (alpha) is always present.
std::vector<std::vector<DimVector>> hn_decompositions(const DimVector& alpha,
                                                      const SlopeValue& mu,
                                                      const Stability& theta);

/// R_mu^ss(alpha, q) via the alternating sum over prefix-slope tuples.
RatFunc rss_direct(const HNContext& ctx, const DimVector& alpha);

/// Same value through the memoized Harder-Narasimhan recursion.
RatFunc rss_recursive(const HNContext& ctx, const DimVector& alpha);

}  // namespace qcount
