#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcount/partition.hpp"

namespace qcount {

/// Table-driven finite field of order 2..9 (prime or prime power). Elements
/// are indices 0..q-1 with 0 and 1 the additive and multiplicative units;
/// extension-field elements encode polynomial coordinates in base p. Field
/// axioms are verified exhaustively at construction.
class SmallField {
 public:
  using Elem = uint8_t;

  static const SmallField& of_order(int q);
  static bool supported(int q) { return q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 8 || q == 9; }

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return deg_; }

  Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const;

  /// A generator of the multiplicative group.
  Elem generator() const { return gen_; }
  /// Discrete log base generator(); defined for a != 0.
  int log(Elem a) const;

 private:
  SmallField(int p, int deg, const std::vector<int>& modulus);
  void verify_axioms() const;
  size_t idx(Elem a, Elem b) const { return static_cast<size_t>(a) * q_ + b; }

  int q_, p_, deg_;
  std::vector<Elem> add_, mul_, neg_;
  std::vector<Elem> inv_;
  std::vector<int> log_;
  Elem gen_ = 0;
};

/// Dense matrix over a SmallField; zero-dimensional shapes are legal.
class FFMatrix {
 public:
  FFMatrix() : field_(nullptr), rows_(0), cols_(0) {}
  FFMatrix(const SmallField& f, int rows, int cols)
      : field_(&f), rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {}

  static FFMatrix identity(const SmallField& f, int n);

  const SmallField& field() const { return *field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  SmallField::Elem at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, SmallField::Elem v) { e_[static_cast<size_t>(r) * cols_ + c] = v; }
  const std::vector<SmallField::Elem>& entries() const { return e_; }
  std::vector<SmallField::Elem>& entries() { return e_; }

  FFMatrix mul(const FFMatrix& rhs) const;
  FFMatrix add(const FFMatrix& rhs) const;
  FFMatrix sub(const FFMatrix& rhs) const;
  bool is_zero() const;
  bool operator==(const FFMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && e_ == rhs.e_;
  }

  /// Reduces in place to reduced row echelon form; returns pivot columns.
  std::vector<int> rref();
  int rank() const;
  std::optional<FFMatrix> inverse() const;

  std::string to_string() const;

 private:
  const SmallField* field_;
  int rows_, cols_;
  std::vector<SmallField::Elem> e_;
};

/// Basis of the solution space of A x = 0 (columns of A are the unknowns).
std::vector<std::vector<SmallField::Elem>> nullspace_basis(FFMatrix a);

/// Nilpotent Jordan matrix J_lambda: blocks with ones on the superdiagonal.
FFMatrix jordan_matrix(const SmallField& f, const Partition& lambda);

}  // namespace qcount
