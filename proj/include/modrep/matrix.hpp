#pragma once

// Dense row-major matrices over a Field.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "modrep/field.hpp"
#include "modrep/poly.hpp"

namespace modrep {

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix zero(FieldPtr field, std::size_t rows, std::size_t cols) { return {std::move(field), rows, cols}; }
  /// Integer entries reduced mod p (row-major nested lists).
  static Matrix from_ints(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Elem operator()(std::size_t r, std::size_t c) const noexcept { return a_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) noexcept { return a_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const noexcept { return {a_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) noexcept { return {a_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& entries() const noexcept { return a_; }

  Matrix operator*(const Matrix& b) const;
  Matrix operator+(const Matrix& b) const;
  Matrix operator-(const Matrix& b) const;
  Matrix scaled(Elem c) const;
  Matrix transpose() const;
  Matrix inverse() const;  // throws SingularGenerator if singular
  Matrix pow(std::uint64_t e) const;
  /// Column-vector product A v.
  std::vector<Elem> apply(std::span<const Elem> v) const;
  /// Row-vector product v A.
  std::vector<Elem> apply_left(std::span<const Elem> v) const;
  bool is_zero() const noexcept;
  bool is_identity() const noexcept;
  /// Entry-wise image under a field embedding.
  Matrix embedded(const FieldEmbedding& e) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_ &&
           (a.field_ == b.field_ || (a.field_ && b.field_ && a.field_->same_as(*b.field_)));
  }

  std::string to_string() const;

 private:
  void require_same_field(const Matrix& b) const;

  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> a_;
};

struct RrefResult {
  Matrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Right null space basis, one vector per row of the result (cols x rows
/// count = nullity). Each vector has a 1 in its free column and zeros in the
/// other free columns, so the output is canonical.
Matrix kernel_basis(const Matrix& a);
Matrix kron(const Matrix& a, const Matrix& b);
std::size_t eigenspace_dim(const Matrix& a, Elem lambda);
Elem determinant(const Matrix& a);
/// Characteristic polynomial det(xI - A), via Hessenberg reduction.
Poly char_poly(const Matrix& a);
/// p(A) by Horner's rule.
Matrix eval_poly(const Poly& p, const Matrix& a);
Matrix block_diag(const Matrix& a, const Matrix& b);

/// Row-space basis in reduced echelon form with incremental insertion.
/// Used for spinning and for stacking linear systems.
class EchelonBasis {
 public:
  EchelonBasis(FieldPtr field, std::size_t dim);

  /// Reduces v against the basis; returns true (and stores it) if it was
  /// independent. `v` is overwritten with its reduced form.
  bool insert(std::vector<Elem> v);
  /// Reduces v in place against the basis.
  void reduce(std::vector<Elem>& v) const;
  bool contains(std::vector<Elem> v) const;
  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  bool full() const noexcept { return rows_.size() == dim_; }
  /// Fully reduced basis as matrix rows, ordered by pivot.
  Matrix to_rref() const;

 private:
  FieldPtr field_;
  std::size_t dim_;
  std::vector<std::vector<Elem>> rows_;   // each normalized with pivot 1
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;           // column -> row index or -1
};

}  // namespace modrep
