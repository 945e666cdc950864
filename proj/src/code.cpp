#include "prmhull/code.hpp"

namespace prmhull {

LinearCode::LinearCode(Matrix generator, std::string label)
    : generator_(std::move(generator)), label_(std::move(label)) {
  if (rank(generator_) != generator_.rows()) {
    throw Error("generator matrix of " + label_ + " is not full rank");
  }
}

LinearCode LinearCode::from_spanning(const Matrix& spanning, std::string label) {
  return LinearCode(SubspaceBasis::span_of(spanning).matrix(), std::move(label));
}

Matrix gram_matrix(const LinearCode& code) {
  return mat_mul(code.generator(), transpose(code.generator()));
}

LinearCode dual(const LinearCode& code) {
  LinearCode d(nullspace(code.generator()).matrix(), "dual(" + code.label() + ")");
  if (d.dimension() != code.length() - code.dimension()) {
    throw InternalInconsistency("dual dimension != N - K for " + code.label());
  }
  if (!mat_mul(code.generator(), transpose(d.generator())).is_zero()) {
    throw InternalInconsistency("dual basis not orthogonal to " + code.label());
  }
  return d;
}

HullReport hull(const LinearCode& code) {
  const LinearCode d = dual(code);
  SubspaceBasis basis = intersect_rowspaces(code.generator(), d.generator());
  const std::size_t gram_rank = rank(gram_matrix(code));
  const std::size_t dim = basis.dim();
  if (dim + gram_rank != code.dimension()) {
    throw InternalInconsistency("hull of " + code.label() + ": intersection gives " + std::to_string(dim) +
                                " but K - rank(GG^T) = " + std::to_string(code.dimension() - gram_rank));
  }
  return HullReport{std::move(basis), dim, gram_rank};
}

bool is_self_orthogonal(const LinearCode& code) { return gram_matrix(code).is_zero(); }

bool is_lcd(const LinearCode& code) { return rank(gram_matrix(code)) == code.dimension(); }

bool is_self_dual(const LinearCode& code) {
  return 2 * code.dimension() == code.length() && is_self_orthogonal(code);
}

bool contains_vector(const LinearCode& code, std::span<const elem_t> v) {
  if (v.size() != code.length()) throw DimensionMismatch("vector length != code length");
  Matrix m = code.generator();
  m.append_row(v);
  return rank(m) == code.dimension();
}

bool equal_codes(const LinearCode& a, const LinearCode& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("equal_codes: different fields");
  if (a.length() != b.length()) throw DimensionMismatch("equal_codes: different lengths");
  if (a.dimension() != b.dimension()) return false;
  return SubspaceBasis::span_of(a.generator()) == SubspaceBasis::span_of(b.generator());
}

}  // namespace prmhull
