#include "prmhull/exactla.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace prmhull {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<elem_t> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw DimensionMismatch("entry count != rows * cols");
  for (elem_t x : entries_) {
    if (x >= field_.q()) throw OutOfRange("matrix entry outside the field");
  }
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<std::vector<elem_t>>& rows) {
  std::vector<elem_t> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("ragged row");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(std::move(field), rows.size(), cols, std::move(entries));
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(entries_.begin() + a * cols_, entries_.begin() + (a + 1) * cols_,
                   entries_.begin() + b * cols_);
}

void Matrix::append_row(std::span<const elem_t> row) {
  if (row.size() != cols_) throw DimensionMismatch("appended row has wrong length");
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](elem_t x) { return x == 0; });
}

namespace {

// In-place Gauss-Jordan. With full = false only rows below the pivot are
// cleared (row-echelon form, pivots still normalized to 1).
std::vector<std::size_t> eliminate(Matrix& m, bool full) {
  const Field& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(r, piv);
    const elem_t lead = m(r, c);
    auto prow = m.row(r).subspan(c);
    if (lead != 1) f.scale(prow, f.inv(lead));
    for (std::size_t i = full ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      const elem_t x = m(i, c);
      if (x == 0) continue;
      f.axpy(m.row(i).subspan(c), f.neg(x), prow);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Matrix take_rows(const Matrix& m, std::size_t count) {
  std::vector<elem_t> entries(m.entries().begin(), m.entries().begin() + count * m.cols());
  return Matrix(m.field(), count, m.cols(), std::move(entries));
}

}  // namespace

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  auto pivots = eliminate(r, true);
  const std::size_t rk = pivots.size();
  return RrefResult{std::move(r), std::move(pivots), rk};
}

SubspaceBasis SubspaceBasis::span_of(const Matrix& m) {
  auto res = rref(m);
  return SubspaceBasis(take_rows(res.reduced, res.rank), std::move(res.pivots));
}

SubspaceBasis SubspaceBasis::zero(Field field, std::size_t ambient) {
  return SubspaceBasis(Matrix(std::move(field), 0, ambient), {});
}

bool SubspaceBasis::contains(std::span<const elem_t> v) const {
  if (v.size() != ambient()) throw DimensionMismatch("vector length != ambient dimension");
  const Field& f = basis_.field();
  std::vector<elem_t> w(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const elem_t x = w[pivots_[i]];
    if (x != 0) f.axpy(w, f.neg(x), basis_.row(i));
  }
  return std::all_of(w.begin(), w.end(), [](elem_t x) { return x == 0; });
}

SubspaceBasis nullspace(const Matrix& m) {
  const Field& f = m.field();
  const auto res = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : res.pivots) is_pivot[c] = true;
  Matrix kernel(f, 0, cols);
  std::vector<elem_t> v(cols);
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < res.rank; ++i) v[res.pivots[i]] = f.neg(res.reduced(i, free));
    kernel.append_row(v);
  }
  return SubspaceBasis::span_of(kernel);
}

SubspaceBasis intersect_rowspaces(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("intersect_rowspaces: different fields");
  if (a.cols() != b.cols()) throw DimensionMismatch("intersect_rowspaces: column counts differ");
  const std::size_t n = a.cols();
  Matrix block(a.field(), a.rows() + b.rows(), 2 * n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto src = a.row(i);
    auto dst = block.row(i);
    std::copy(src.begin(), src.end(), dst.begin());
    std::copy(src.begin(), src.end(), dst.begin() + n);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    auto src = b.row(i);
    std::copy(src.begin(), src.end(), block.row(a.rows() + i).begin());
  }
  const auto pivots = eliminate(block, false);
  Matrix meet(a.field(), 0, n);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= n) meet.append_row(block.row(i).subspan(n));
  }
  return SubspaceBasis::span_of(meet);
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("mat_mul: different fields");
  if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul: inner dimensions differ");
  const Field& f = a.field();
  Matrix c(f, a.rows(), b.cols());
  if (f.e() == 1) {
    const Matrix bt = transpose(b);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.dot(a.row(i), bt.row(j));
    return c;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t t = 0; t < a.cols(); ++t) f.axpy(out, a(i, t), b.row(t));
  }
  return c;
}

std::size_t rank(const Matrix& m) {
  Matrix r = m;
  return eliminate(r, false).size();
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("vstack: different fields");
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
  std::vector<elem_t> entries = a.entries();
  entries.insert(entries.end(), b.entries().begin(), b.entries().end());
  return Matrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(entries));
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.field().q() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
}

Matrix read_matrix(std::istream& in) {
  std::uint64_t q = 0, rows = 0, cols = 0;
  if (!(in >> q >> rows >> cols)) throw Error("matrix header must be `q rows cols`");
  if (q > kMaxFieldSize) throw NotPrimePower("q = " + std::to_string(q) + " is too large");
  Field f = Field::make(static_cast<std::uint32_t>(q));
  std::vector<elem_t> entries;
  entries.reserve(rows * cols);
  for (std::uint64_t i = 0; i < rows * cols; ++i) {
    std::uint64_t x = 0;
    if (!(in >> x)) throw Error("matrix body truncated after " + std::to_string(i) + " entries");
    if (x >= q) throw OutOfRange("matrix entry " + std::to_string(x) + " >= q");
    entries.push_back(static_cast<elem_t>(x));
  }
  return Matrix(f, rows, cols, std::move(entries));
}

}  // namespace prmhull
