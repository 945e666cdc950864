#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prmhull/field.hpp"

namespace prmhull {

/// Exponent vector (a_0, ..., a_n).
struct Monomial {
  std::vector<std::uint32_t> exponents;

  std::uint32_t degree() const;
  std::size_t vars() const { return exponents.size(); }
  /// `a0,a1,...,an`
  std::string to_string() const;

  /// x_i^power in `vars` variables.
  static Monomial power_of(std::size_t vars, std::size_t i, std::uint32_t power);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Parses `a0,a1,...,an`. Throws Error on malformed text.
Monomial parse_monomial(const std::string& text);

/// Ordered evaluation points, `arity` coordinates each.
class PointSet {
 public:
  PointSet(Field field, std::size_t arity, std::vector<elem_t> coords);

  const Field& field() const { return field_; }
  std::size_t arity() const { return arity_; }
  std::size_t size() const { return coords_.size() / arity_; }
  std::span<const elem_t> point(std::size_t i) const { return {coords_.data() + i * arity_, arity_}; }

 private:
  Field field_;
  std::size_t arity_;
  std::vector<elem_t> coords_;
};

/// Standard representatives of P^n(F_q): leftmost nonzero coordinate is 1.
/// Ordered by the position of that leading 1 (position 0 first), then
/// lexicographically by element index with the last coordinate fastest.
PointSet projective_points(const Field& field, std::uint32_t n);

/// All of F_q^n, lexicographic with the last coordinate fastest.
PointSet affine_points(const Field& field, std::uint32_t n);

/// All C(n+k, k) monomials of degree k in x_0..x_n, lexicographic with x_0
/// heaviest: x_0^k first, x_n^k last.
std::vector<Monomial> monomials_of_degree(std::uint32_t n, std::uint32_t k);

/// Replaces every positive exponent a(q-1)+b, 0 < b <= q-1, by b.
Monomial reduce_monomial(const Monomial& m, std::uint32_t q);

/// Reduced monomials of every degree t with t ≡ k (mod q-1), 0 < t <= k,
/// degree descending and lexicographic within a degree. Requires k >= 1.
std::vector<Monomial> reduced_basis_monomials(std::uint32_t n, std::uint32_t k, std::uint32_t q);

/// Reduced monomials in n variables of total degree <= k, degree ascending
/// then lexicographic. Basis of the affine Reed-Muller code.
std::vector<Monomial> affine_basis_monomials(std::uint32_t n, std::uint32_t k, std::uint32_t q);

/// (m(P_1), ..., m(P_N)) with 0^0 = 1.
std::vector<elem_t> evaluate(const Monomial& m, const PointSet& points);

}  // namespace prmhull
