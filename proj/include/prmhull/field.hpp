#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "prmhull/errors.hpp"

namespace prmhull {

/// Element index in 0..q-1. Index i stands for the polynomial whose base-p
/// digits (least significant first) are its coefficients over F_p.
using elem_t = std::uint16_t;

inline constexpr std::uint32_t kMaxFieldSize = 1u << 16;
inline constexpr std::uint32_t kTableFieldLimit = 256;

namespace detail {
struct FieldData;
}

class FieldElement;

/// The finite field F_q, q = p^e <= 2^16, with the canonical modulus: the
/// lexicographically smallest monic irreducible polynomial of degree e over
/// F_p (coefficients compared constant term first).
///
/// Field is a cheap, immutable handle. Two handles compare equal iff they
/// have the same cardinality; the canonical modulus makes that sufficient.
class Field {
 public:
  /// Throws NotPrimePower unless 2 <= q <= 2^16 and q is a prime power.
  static Field make(std::uint32_t q);

  std::uint32_t q() const { return q_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  /// Monic modulus, constant term first (length e+1). {0, 1} for prime fields.
  const std::vector<std::uint32_t>& modulus() const;
  bool table_driven() const { return add_ != nullptr; }
  /// q*q addition table (a*q+b), or nullptr above kTableFieldLimit.
  const elem_t* add_table() const { return add_; }

  elem_t add(elem_t a, elem_t b) const {
    if (add_) return add_[a * q_ + b];
    return add_slow(a, b);
  }
  elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }
  elem_t neg(elem_t a) const {
    if (neg_) return neg_[a];
    return neg_slow(a);
  }
  elem_t mul(elem_t a, elem_t b) const {
    if (mul_) return mul_[a * q_ + b];
    return mul_slow(a, b);
  }
  /// Throws DivisionByZero for a == 0.
  elem_t inv(elem_t a) const;
  elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }
  /// a^r with 0^0 = 1.
  elem_t pow(elem_t a, std::uint64_t r) const;

  /// Image of an integer under Z -> F_p -> F_q.
  elem_t from_int(std::int64_t v) const;

  /// dst[i] += f * src[i].
  void axpy(std::span<elem_t> dst, elem_t f, std::span<const elem_t> src) const;
  /// sum_i a[i] * b[i].
  elem_t dot(std::span<const elem_t> a, std::span<const elem_t> b) const;
  /// v[i] *= f.
  void scale(std::span<elem_t> v, elem_t f) const;

  FieldElement element(std::uint32_t index) const;
  FieldElement zero() const;
  FieldElement one() const;

  friend bool operator==(const Field& a, const Field& b) { return a.q_ == b.q_; }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data);

  elem_t add_slow(elem_t a, elem_t b) const;
  elem_t neg_slow(elem_t a) const;
  elem_t mul_slow(elem_t a, elem_t b) const;

  std::shared_ptr<const detail::FieldData> data_;
  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  const elem_t* add_ = nullptr;
  const elem_t* mul_ = nullptr;
  const elem_t* neg_ = nullptr;
  const elem_t* inv_ = nullptr;
};

/// An element bound to its field. Mixing elements of different fields
/// raises FieldMismatch.
class FieldElement {
 public:
  FieldElement(Field field, std::uint32_t index);

  const Field& field() const { return field_; }
  elem_t index() const { return index_; }
  bool is_zero() const { return index_ == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.index_ == b.index_;
  }

 private:
  Field field_;
  elem_t index_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t r);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }

/// sum over all beta in F_q of beta^r, computed by literal summation.
/// Equals -1 when r > 0 and (q-1) | r, otherwise 0.
FieldElement power_sum(const Field& field, std::uint64_t r);

/// Factor q as p^e. Returns false if q is not a prime power (or q < 2).
bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& e);

}  // namespace prmhull
