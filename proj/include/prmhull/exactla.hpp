#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "prmhull/field.hpp"

namespace prmhull {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<elem_t> entries);

  static Matrix identity(Field field, std::size_t n);
  /// Every row must have length `cols`.
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<std::vector<elem_t>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  elem_t operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  elem_t& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const elem_t> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<elem_t> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  const std::vector<elem_t>& entries() const { return entries_; }

  void swap_rows(std::size_t a, std::size_t b);
  /// Appends a row of length cols().
  void append_row(std::span<const elem_t> row);
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<elem_t> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row-echelon form. Pivots are chosen as the first nonzero entry,
/// top to bottom, in the leftmost unresolved column.
RrefResult rref(const Matrix& m);

/// Row space of a matrix, held canonically: RREF with zero rows dropped.
/// Two bases compare equal iff the row spaces are equal.
class SubspaceBasis {
 public:
  static SubspaceBasis span_of(const Matrix& m);
  /// The zero subspace of F_q^ambient.
  static SubspaceBasis zero(Field field, std::size_t ambient);

  const Matrix& matrix() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Membership via reduction against the canonical basis.
  bool contains(std::span<const elem_t> v) const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) { return a.basis_ == b.basis_; }

 private:
  SubspaceBasis(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : M x^T = 0}.
SubspaceBasis nullspace(const Matrix& m);

/// rowspace(a) ∩ rowspace(b) by Zassenhaus: echelonize [a a; b 0] and read
/// the intersection off the rows whose left half vanished.
SubspaceBasis intersect_rowspaces(const Matrix& a, const Matrix& b);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Rows of a followed by rows of b.
Matrix vstack(const Matrix& a, const Matrix& b);

/// Text format: a header line `q rows cols`, then one line per row of
/// space-separated element indices.
void write_matrix(std::ostream& out, const Matrix& m);
/// Throws Error on malformed input.
Matrix read_matrix(std::istream& in);

}  // namespace prmhull
