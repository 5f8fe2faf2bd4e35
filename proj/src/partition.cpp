#include "qcount/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qcount {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("partition parts must be >= 1");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  for (int p : parts_) {
    mult_[p]++;
    size_ += p;
  }
}

int Partition::multiplicity(int s) const {
  auto it = mult_.find(s);
  return it == mult_.end() ? 0 : it->second;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  for (int t = 1; t <= largest_part(); ++t) {
    int count = 0;
    for (int p : parts_)
      if (p >= t) ++count;
    conj.push_back(count);
  }
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

long long min_pairing(const Partition& a, const Partition& b) {
  long long s = 0;
  for (int p : a.parts())
    for (int r : b.parts()) s += std::min(p, r);
  return s;
}

long long min_pairing_via_conjugates(const Partition& a, const Partition& b) {
  Partition ca = a.conjugate();
  Partition cb = b.conjugate();
  long long s = 0;
  size_t m = std::min(ca.parts().size(), cb.parts().size());
  for (size_t t = 0; t < m; ++t)
    s += static_cast<long long>(ca.parts()[t]) * cb.parts()[t];
  return s;
}

long long u_pairing(const Partition& a, const Partition& b) {
  long long s = min_pairing(a, b);
  for (const auto& [part, m] : a.multiplicities()) s -= static_cast<long long>(m) * b.multiplicity(part);
  return s;
}

QPolynomial b_poly(const Partition& lambda) {
  QPolynomial out = QPolynomial::one();
  for (const auto& [part, m] : lambda.multiplicities()) {
    (void)part;
    for (int k = 1; k <= m; ++k)
      out *= QPolynomial::one() - QPolynomial::q_power(k);
  }
  return out;
}

RatFunc centralizer_order(const Partition& lambda) {
  // b_lambda(q^{-1}) = reverse(b_lambda)(q) / q^{deg b_lambda}.
  QPolynomial b = b_poly(lambda);
  std::vector<BigRational> rev(b.coeffs().rbegin(), b.coeffs().rend());
  RatFunc b_inv(QPolynomial(std::move(rev)), QPolynomial::q_power(b.degree()));
  long long e = min_pairing(lambda, lambda);
  return RatFunc::q_power(static_cast<int>(e)) * b_inv;
}

namespace {

void collect_partitions(int remaining, int max_part, std::vector<int>& parts,
                        std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(parts);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    parts.push_back(p);
    collect_partitions(remaining - p, p, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
  if (m < 0) throw std::invalid_argument("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> parts;
  collect_partitions(m, m, parts, out);
  if (m == 0) return {Partition()};
  return out;
}

std::vector<Partition> partitions_up_to(int m) {
  std::vector<Partition> out;
  for (int k = 0; k <= m; ++k) {
    auto pk = partitions_of(k);
    out.insert(out.end(), pk.begin(), pk.end());
  }
  return out;
}

DimVector PartitionTuple::size_vector() const {
  std::vector<int> v;
  v.reserve(entries.size());
  for (const auto& p : entries) v.push_back(p.size());
  return DimVector(std::move(v));
}

int PartitionTuple::largest_part() const {
  int r = 0;
  for (const auto& p : entries) r = std::max(r, p.largest_part());
  return r;
}

std::string PartitionTuple::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < length(); ++i) {
    if (i) os << ", ";
    os << entries[static_cast<size_t>(i)].to_string();
  }
  os << ")";
  return os.str();
}

std::vector<PartitionTuple> enumerate_partition_tuples(const DimVector& bound) {
  std::vector<std::vector<Partition>> per_vertex;
  per_vertex.reserve(static_cast<size_t>(bound.size()));
  for (int i = 0; i < bound.size(); ++i) per_vertex.push_back(partitions_up_to(bound[i]));

  std::vector<PartitionTuple> out;
  std::vector<Partition> current(static_cast<size_t>(bound.size()));
  std::function<void(int)> rec = [&](int vertex) {
    if (vertex == bound.size()) {
      out.emplace_back(current);
      return;
    }
    for (const auto& p : per_vertex[static_cast<size_t>(vertex)]) {
      current[static_cast<size_t>(vertex)] = p;
      rec(vertex + 1);
    }
  };
  rec(0);
  return out;
}

DimVector multiplicity_vector(const PartitionTuple& tau, int s) {
  if (s < 1) throw std::invalid_argument("multiplicity order must be >= 1");
  std::vector<int> v;
  v.reserve(static_cast<size_t>(tau.length()));
  for (const auto& p : tau.entries) v.push_back(p.multiplicity(s));
  return DimVector(std::move(v));
}

}  // namespace qcount
