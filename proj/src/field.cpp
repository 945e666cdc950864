#include "prmhull/field.hpp"

#include <string>

namespace prmhull {

namespace detail {

struct FieldData {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::vector<std::uint32_t> modulus;  // monic, constant term first
  std::vector<elem_t> add;
  std::vector<elem_t> mul;
  std::vector<elem_t> neg;
  std::vector<elem_t> inv;
};

}  // namespace detail

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients mod p, constant first

Poly digits(std::uint32_t index, std::uint32_t p, std::uint32_t e) {
  Poly d(e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

std::uint32_t undigits(const Poly& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1, base = a % p;
  std::uint32_t r = p - 2;
  while (r) {
    if (r & 1) result = result * base % p;
    base = base * base % p;
    r >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a monic-or-not divisor b (b nonzero, trimmed).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_prime(b.back(), p);
  while (a.size() > db && !a.empty()) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = c * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg <= 1) return true;
  if (f[0] == 0) return false;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = digits(static_cast<std::uint32_t>(c), p, static_cast<std::uint32_t>(d));
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree e, comparing
// coefficient vectors constant term first.
Poly canonical_modulus(std::uint32_t p, std::uint32_t e) {
  if (e == 1) return {0, 1};
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    // c0 is the most significant digit of c so that increasing c walks the
    // lexicographic order.
    Poly f(e + 1, 0);
    std::uint64_t rest = c;
    for (std::uint32_t i = e; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[e] = 1;
    if (irreducible(f, p)) return f;
  }
  throw InternalInconsistency("no irreducible polynomial found");
}

std::uint32_t poly_mul_index(std::uint32_t a, std::uint32_t b, const detail::FieldData& d) {
  const std::uint32_t p = d.p, e = d.e;
  if (e == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  const Poly x = digits(a, p, e), y = digits(b, p, e);
  Poly prod(2 * e - 1, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    if (x[i] == 0) continue;
    for (std::uint32_t j = 0; j < e; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p);
    }
  }
  Poly r = poly_mod(prod, d.modulus, p);
  r.resize(e, 0);
  return undigits(r, p);
}

std::uint32_t poly_add_index(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t e) {
  if (p == 2) return a ^ b;
  if (e == 1) return (a + b) % p;
  std::uint32_t v = 0, scale = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    v += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return v;
}

std::uint32_t poly_neg_index(std::uint32_t a, std::uint32_t p, std::uint32_t e) {
  if (p == 2) return a;
  std::uint32_t v = 0, scale = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    v += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return v;
}

}  // namespace

bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& e) {
  if (q < 2) return false;
  std::uint32_t f = 2;
  while (f * f <= q && q % f != 0) ++f;
  if (q % f != 0) f = q;  // q itself is prime
  std::uint32_t rest = q;
  e = 0;
  while (rest % f == 0) {
    rest /= f;
    ++e;
  }
  p = f;
  return rest == 1;
}

Field::Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {
  q_ = data_->q;
  p_ = data_->p;
  e_ = data_->e;
  if (!data_->add.empty()) {
    add_ = data_->add.data();
    mul_ = data_->mul.data();
    neg_ = data_->neg.data();
    inv_ = data_->inv.data();
  }
}

Field Field::make(std::uint32_t q) {
  std::uint32_t p = 0, e = 0;
  if (q > kMaxFieldSize || !prime_power(q, p, e)) {
    throw NotPrimePower("q = " + std::to_string(q) + " is not a prime power in [2, 65536]");
  }
  auto d = std::make_shared<detail::FieldData>();
  d->q = q;
  d->p = p;
  d->e = e;
  d->modulus = canonical_modulus(p, e);
  if (q <= kTableFieldLimit) {
    d->add.resize(q * q);
    d->mul.resize(q * q);
    d->neg.resize(q);
    d->inv.resize(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      d->neg[a] = static_cast<elem_t>(poly_neg_index(a, p, e));
      for (std::uint32_t b = 0; b < q; ++b) {
        d->add[a * q + b] = static_cast<elem_t>(poly_add_index(a, b, p, e));
        d->mul[a * q + b] = static_cast<elem_t>(poly_mul_index(a, b, *d));
      }
    }
    for (std::uint32_t a = 1; a < q; ++a) {
      for (std::uint32_t b = 1; b < q; ++b) {
        if (d->mul[a * q + b] == 1) {
          d->inv[a] = static_cast<elem_t>(b);
          break;
        }
      }
    }
  }
  return Field(std::move(d));
}

const std::vector<std::uint32_t>& Field::modulus() const { return data_->modulus; }

elem_t Field::add_slow(elem_t a, elem_t b) const {
  return static_cast<elem_t>(poly_add_index(a, b, p_, e_));
}

elem_t Field::neg_slow(elem_t a) const { return static_cast<elem_t>(poly_neg_index(a, p_, e_)); }

elem_t Field::mul_slow(elem_t a, elem_t b) const {
  if (a == 0 || b == 0) return 0;
  return static_cast<elem_t>(poly_mul_index(a, b, *data_));
}

elem_t Field::inv(elem_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  if (inv_) return inv_[a];
  if (e_ == 1) return static_cast<elem_t>(inv_mod_prime(a, p_));
  return pow(a, q_ - 2);
}

elem_t Field::pow(elem_t a, std::uint64_t r) const {
  elem_t result = 1;
  elem_t base = a;
  while (r) {
    if (r & 1) result = mul(result, base);
    r >>= 1;
    if (r) base = mul(base, base);
  }
  return result;
}

elem_t Field::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<elem_t>(m);
}

void Field::axpy(std::span<elem_t> dst, elem_t f, std::span<const elem_t> src) const {
  if (dst.size() != src.size()) throw DimensionMismatch("axpy length mismatch");
  if (f == 0) return;
  const std::size_t n = dst.size();
  if (mul_) {
    const elem_t* row = mul_ + static_cast<std::size_t>(f) * q_;
    if (p_ == 2) {
      for (std::size_t i = 0; i < n; ++i) dst[i] ^= row[src[i]];
    } else {
      for (std::size_t i = 0; i < n; ++i) dst[i] = add_[dst[i] * q_ + row[src[i]]];
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (src[i]) dst[i] = add(dst[i], mul(f, src[i]));
  }
}

elem_t Field::dot(std::span<const elem_t> a, std::span<const elem_t> b) const {
  if (a.size() != b.size()) throw DimensionMismatch("dot length mismatch");
  const std::size_t n = a.size();
  if (e_ == 1) {
    // Prime field: exact integer accumulation, one reduction per block.
    const std::uint64_t p = p_;
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += static_cast<std::uint64_t>(a[i]) * b[i];
      if ((i & 0xFFFF) == 0xFFFF) acc %= p;
    }
    return static_cast<elem_t>(acc % p);
  }
  elem_t acc = 0;
  if (p_ == 2) {
    for (std::size_t i = 0; i < n; ++i) acc ^= mul(a[i], b[i]);
  } else {
    elem_t part[4] = {0, 0, 0, 0};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      for (std::size_t j = 0; j < 4; ++j) part[j] = add(part[j], mul(a[i + j], b[i + j]));
    }
    for (; i < n; ++i) acc = add(acc, mul(a[i], b[i]));
    for (auto x : part) acc = add(acc, x);
  }
  return acc;
}

void Field::scale(std::span<elem_t> v, elem_t f) const {
  for (auto& x : v) x = mul(x, f);
}

FieldElement Field::element(std::uint32_t index) const { return FieldElement(*this, index); }
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

FieldElement::FieldElement(Field field, std::uint32_t index)
    : field_(std::move(field)), index_(static_cast<elem_t>(index)) {
  if (index >= field_.q()) {
    throw OutOfRange("element index " + std::to_string(index) + " >= q");
  }
}

namespace {
const Field& common(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("operands belong to different fields");
  return a.field();
}
}  // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
  const Field& f = common(a, b);
  return f.element(f.add(a.index(), b.index()));
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
  const Field& f = common(a, b);
  return f.element(f.sub(a.index(), b.index()));
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  const Field& f = common(a, b);
  return f.element(f.mul(a.index(), b.index()));
}

FieldElement inv(const FieldElement& a) { return a.field().element(a.field().inv(a.index())); }

FieldElement pow(const FieldElement& a, std::uint64_t r) {
  return a.field().element(a.field().pow(a.index(), r));
}

FieldElement power_sum(const Field& field, std::uint64_t r) {
  elem_t acc = 0;
  for (std::uint32_t beta = 0; beta < field.q(); ++beta) {
    acc = field.add(acc, field.pow(static_cast<elem_t>(beta), r));
  }
  return field.element(acc);
}

}  // namespace prmhull
