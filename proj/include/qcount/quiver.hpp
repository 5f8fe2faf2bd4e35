#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "qcount/polynomial.hpp"
#include "qcount/rational.hpp"

namespace qcount {

/// Dimension vector: n non-negative integers. Ordered lexicographically so it
/// can key maps; componentwise order is a separate named function.
struct DimVector {
  std::vector<int> comp;

  DimVector() = default;
  explicit DimVector(std::vector<int> c);
  static DimVector zeros(int n) { return DimVector(std::vector<int>(n, 0)); }

  int size() const { return static_cast<int>(comp.size()); }
  int operator[](int i) const { return comp[static_cast<size_t>(i)]; }
  long long ht() const;
  bool is_zero() const;

  DimVector operator+(const DimVector& rhs) const;
  /// Componentwise difference; requires rhs <= *this componentwise.
  DimVector operator-(const DimVector& rhs) const;
  DimVector scaled(int k) const;
  /// Componentwise exact division by k, or nullopt if k does not divide.
  std::optional<DimVector> divided(int k) const;

  auto operator<=>(const DimVector&) const = default;
};

bool leq_componentwise(const DimVector& a, const DimVector& b);
/// gcd of the components (0 for the zero vector).
int component_gcd(const DimVector& a);

/// Stability function theta: Z^n -> Z.
struct Stability {
  std::vector<int> weights;

  Stability() = default;
  explicit Stability(std::vector<int> w) : weights(std::move(w)) {}
  int size() const { return static_cast<int>(weights.size()); }
  long long operator()(const DimVector& alpha) const;
};

using SlopeValue = BigRational;

/// Quiver on n vertices given by its arrow-count matrix a[i][j].
struct Quiver {
  int n = 0;
  std::vector<std::vector<int>> arrows;

  Quiver() = default;
  Quiver(int n_, std::vector<std::vector<int>> arrows_);

  static Quiver jordan() { return Quiver(1, {{1}}); }
  /// m arrows from vertex 0 to vertex 1.
  static Quiver kronecker(int m = 2) { return Quiver(2, {{0, m}, {0, 0}}); }

  /// Arrows flattened to (source, target) pairs, row-major, multiplicity-expanded.
  std::vector<std::pair<int, int>> arrow_list() const;
  /// Sum a_ij alpha_i alpha_j: number of matrix entries of a representation.
  long long total_entries(const DimVector& alpha) const;
};

/// <a, b> = sum a_i b_i - sum arrows_ij a_i b_j.
long long euler_form(const Quiver& q, const DimVector& a, const DimVector& b);
long long euler_form(const Quiver& q, const std::vector<int>& a, const std::vector<int>& b);

/// R(alpha, q) = q^{sum a_ij alpha_i alpha_j}.
QPolynomial rep_count(const Quiver& q, const DimVector& alpha);

/// |GL(alpha, F_q)| as a polynomial in q; 1 for alpha = 0.
QPolynomial gl_order(const DimVector& alpha);

/// theta(alpha) / ht(alpha); throws "slope of zero vector" when alpha = 0.
SlopeValue slope(const Stability& theta, const DimVector& alpha);

/// True iff theta(alpha) = mu * ht(alpha); the zero vector is a member.
bool in_delta_plus(const Stability& theta, const SlopeValue& mu, const DimVector& alpha);

}  // namespace qcount
