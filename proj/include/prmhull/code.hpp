#pragma once

#include <span>
#include <string>

#include "prmhull/exactla.hpp"

namespace prmhull {

/// A linear code given by a full-rank K x N generator matrix. The matrix is
/// kept exactly as supplied so that rows keep their correspondence with
/// whatever labelled them (monomials, for evaluation codes).
class LinearCode {
 public:
  /// Throws Error if the rows of `generator` are dependent.
  LinearCode(Matrix generator, std::string label);
  /// Keeps a basis (canonical RREF) of the row space of `spanning`.
  static LinearCode from_spanning(const Matrix& spanning, std::string label);

  const Field& field() const { return generator_.field(); }
  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }
  const Matrix& generator() const { return generator_; }
  const std::string& label() const { return label_; }

 private:
  Matrix generator_;
  std::string label_;
};

struct HullReport {
  SubspaceBasis hull_basis;
  std::size_t hull_dim = 0;
  std::size_t gram_rank = 0;
};

/// G G^T.
Matrix gram_matrix(const LinearCode& code);

/// Generator is the canonical nullspace basis of G. Throws
/// InternalInconsistency if a dual row is not orthogonal to every row of G.
LinearCode dual(const LinearCode& code);

/// Hull by subspace intersection with the dual, cross-checked against
/// rank(G G^T) = K - dim Hull. Throws InternalInconsistency on mismatch.
HullReport hull(const LinearCode& code);

bool is_self_orthogonal(const LinearCode& code);  // G G^T = 0
bool is_lcd(const LinearCode& code);              // G G^T invertible
bool is_self_dual(const LinearCode& code);        // self-orthogonal and 2K = N

bool contains_vector(const LinearCode& code, std::span<const elem_t> v);
bool equal_codes(const LinearCode& a, const LinearCode& b);

}  // namespace prmhull
