#pragma once

#include <compare>
#include <map>
#include <vector>

#include "qcount/quiver.hpp"
#include "qcount/ratfunc.hpp"

namespace qcount {

/// Partition: weakly decreasing positive parts, possibly empty. Parts are
/// kept sorted; the multiplicity map is cached because both views are needed
/// constantly.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// |lambda| = sum of parts.
  int size() const { return size_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }
  /// Number of parts equal to s.
  int multiplicity(int s) const;
  const std::map<int, int>& multiplicities() const { return mult_; }
  Partition conjugate() const;

  bool operator==(const Partition& rhs) const { return parts_ == rhs.parts_; }
  auto operator<=>(const Partition& rhs) const { return parts_ <=> rhs.parts_; }

  std::string to_string() const;

 private:
  std::vector<int> parts_;
  std::map<int, int> mult_;
  int size_ = 0;
};

/// <lambda, mu> = sum over part pairs of min(lambda_k, mu_l).
long long min_pairing(const Partition& a, const Partition& b);
/// Same pairing through conjugates: sum_t a'_t b'_t. Independent route kept
/// for cross-checking.
long long min_pairing_via_conjugates(const Partition& a, const Partition& b);

/// (|lambda, mu|) = <lambda, mu> - sum_s m_s(lambda) m_s(mu).
long long u_pairing(const Partition& a, const Partition& b);

/// b_lambda(q) = prod_s prod_{k=1}^{m_s} (1 - q^k).
QPolynomial b_poly(const Partition& lambda);

/// q^{<lambda,lambda>} b_lambda(q^{-1}): the unipotent centralizer order in
/// GL_{|lambda|}(F_q).
RatFunc centralizer_order(const Partition& lambda);

/// All partitions of exactly m, in decreasing lexicographic order of parts.
std::vector<Partition> partitions_of(int m);
/// All partitions of 0, 1, ..., m.
std::vector<Partition> partitions_up_to(int m);

struct PartitionTuple {
  std::vector<Partition> entries;

  PartitionTuple() = default;
  explicit PartitionTuple(std::vector<Partition> e) : entries(std::move(e)) {}

  int length() const { return static_cast<int>(entries.size()); }
  /// (|tau_1|, ..., |tau_n|).
  DimVector size_vector() const;
  int largest_part() const;
  bool operator==(const PartitionTuple&) const = default;

  std::string to_string() const;
};

/// Every tuple tau with |tau_i| <= bound_i for all i, including the all-empty
/// tuple.
std::vector<PartitionTuple> enumerate_partition_tuples(const DimVector& bound);

/// d_tau^s: component i counts the parts of tau_i equal to s.
DimVector multiplicity_vector(const PartitionTuple& tau, int s);

}  // namespace qcount
