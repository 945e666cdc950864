#pragma once

// Slow, independent reference computations used as test oracles.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "prmhull/code.hpp"

namespace oracle {

using Poly = std::vector<std::uint32_t>;  // coefficients, constant term first

inline Poly digits(std::uint32_t v, std::uint32_t p, std::uint32_t e) {
  Poly d(e, 0);
  for (std::uint32_t i = 0; i < e; ++i, v /= p) d[i] = v % p;
  return d;
}

inline std::uint32_t undigits(const Poly& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

/// Schoolbook product of two residues reduced by a monic modulus.
inline std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, const Poly& modulus) {
  const std::uint32_t e = static_cast<std::uint32_t>(modulus.size() - 1);
  const Poly x = digits(a, p, e), y = digits(b, p, e);
  Poly prod(2 * e, 0);
  for (std::uint32_t i = 0; i < e; ++i)
    for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  for (std::size_t deg = prod.size(); deg-- > e;) {
    const std::uint32_t c = prod[deg];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= e; ++i) {
      prod[deg - e + i] = (prod[deg - e + i] + p * p - c * modulus[i] % p) % p;
    }
  }
  prod.resize(e);
  return undigits(prod, p);
}

/// A monic polynomial is irreducible iff F_p[x]/(P) has no zero divisors.
inline bool irreducible_by_zero_divisors(std::uint32_t p, const Poly& modulus) {
  const std::uint32_t e = static_cast<std::uint32_t>(modulus.size() - 1);
  std::uint32_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = a; b < q; ++b)
      if (poly_mul(a, b, p, modulus) == 0) return false;
  return true;
}

/// First monic irreducible of degree e when candidates are ordered by their
/// coefficient vectors, constant term compared first.
inline Poly smallest_irreducible(std::uint32_t p, std::uint32_t e) {
  std::uint32_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint32_t r = 0; r < count; ++r) {
    Poly m(e + 1, 0);
    m[e] = 1;
    std::uint32_t v = r;
    for (std::uint32_t i = e; i-- > 0;) {
      m[i] = v % p;  // the constant term is the most significant digit of r
      v /= p;
    }
    if (irreducible_by_zero_divisors(p, m)) return m;
  }
  return {};
}

/// Every vector of the row space of m, as a set.
inline std::set<std::vector<prmhull::elem_t>> span_set(const prmhull::Matrix& m) {
  const auto& f = m.field();
  std::set<std::vector<prmhull::elem_t>> out;
  std::vector<std::uint32_t> coeff(m.rows(), 0);
  while (true) {
    std::vector<prmhull::elem_t> v(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) v[c] = f.add(v[c], f.mul(static_cast<prmhull::elem_t>(coeff[r]), m(r, c)));
    out.insert(v);
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == f.q()) coeff[i++] = 0;
    if (i == coeff.size()) break;
  }
  return out;
}

/// Weight counts by computing x G for every message x.
inline std::vector<std::uint64_t> naive_distribution(const prmhull::Matrix& g) {
  std::vector<std::uint64_t> counts(g.cols() + 1, 0);
  for (const auto& v : span_set(g)) {
    std::size_t w = 0;
    for (auto x : v) w += x != 0;
    ++counts[w];
  }
  return counts;
}

/// log_q of the number of codewords orthogonal to every generator row.
inline std::size_t brute_hull_dim(const prmhull::LinearCode& code) {
  const auto& f = code.field();
  const auto& g = code.generator();
  std::size_t count = 0;
  for (const auto& v : span_set(g)) {
    bool ok = true;
    for (std::size_t r = 0; r < g.rows() && ok; ++r) ok = f.dot(v, g.row(r)) == 0;
    count += ok;
  }
  std::size_t dim = 0;
  while (count > 1) {
    count /= f.q();
    ++dim;
  }
  return dim;
}

inline prmhull::Matrix random_matrix(const prmhull::Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
  std::vector<prmhull::elem_t> e(rows * cols);
  for (auto& x : e) x = static_cast<prmhull::elem_t>(pick(rng));
  return prmhull::Matrix(f, rows, cols, std::move(e));
}

}  // namespace oracle
