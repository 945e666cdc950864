#include "prmhull/geometry.hpp"

#include <numeric>
#include <sstream>

namespace prmhull {

std::uint32_t Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::uint32_t{0});
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exponents[i]);
  }
  return s;
}

Monomial Monomial::power_of(std::size_t vars, std::size_t i, std::uint32_t power) {
  Monomial m{std::vector<std::uint32_t>(vars, 0)};
  m.exponents.at(i) = power;
  return m;
}

Monomial parse_monomial(const std::string& text) {
  Monomial m;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw Error("bad monomial exponent list: '" + text + "'");
    }
    m.exponents.push_back(static_cast<std::uint32_t>(std::stoul(part)));
  }
  if (m.exponents.empty()) throw Error("empty monomial");
  return m;
}

PointSet::PointSet(Field field, std::size_t arity, std::vector<elem_t> coords)
    : field_(std::move(field)), arity_(arity), coords_(std::move(coords)) {
  if (arity_ == 0 || coords_.size() % arity_ != 0) throw DimensionMismatch("point coordinates not a multiple of arity");
}

namespace {

// Appends every vector in F_q^len to out, last coordinate fastest.
void append_all_vectors(std::vector<elem_t>& out, std::vector<elem_t>& prefix, std::size_t len, std::uint32_t q) {
  std::vector<elem_t> tail(len, 0);
  while (true) {
    out.insert(out.end(), prefix.begin(), prefix.end());
    out.insert(out.end(), tail.begin(), tail.end());
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++tail[i] < q) break;
      tail[i] = 0;
      if (i == 0) return;
    }
    if (len == 0) return;
  }
}

// Exponent vectors of `vars` entries summing to `total` with every entry <=
// cap, lexicographic with the first entry heaviest.
void compositions(std::vector<Monomial>& out, std::vector<std::uint32_t>& cur, std::size_t pos,
                  std::uint32_t remaining, std::uint32_t cap) {
  const std::size_t vars = cur.size();
  if (pos + 1 == vars) {
    if (remaining <= cap) {
      cur[pos] = remaining;
      out.push_back(Monomial{cur});
    }
    return;
  }
  const std::uint32_t top = std::min(remaining, cap);
  for (std::uint32_t a = top + 1; a-- > 0;) {
    // The remaining vars - pos - 1 slots must absorb remaining - a.
    if (static_cast<std::uint64_t>(remaining - a) > static_cast<std::uint64_t>(cap) * (vars - pos - 1)) break;
    cur[pos] = a;
    compositions(out, cur, pos + 1, remaining - a, cap);
  }
  cur[pos] = 0;
}

}  // namespace

PointSet projective_points(const Field& field, std::uint32_t n) {
  if (n < 1) throw OutOfRange("projective dimension must be >= 1");
  std::vector<elem_t> coords;
  for (std::uint32_t lead = 0; lead <= n; ++lead) {
    std::vector<elem_t> prefix(lead, 0);
    prefix.push_back(1);
    append_all_vectors(coords, prefix, n - lead, field.q());
  }
  return PointSet(field, n + 1, std::move(coords));
}

PointSet affine_points(const Field& field, std::uint32_t n) {
  if (n < 1) throw OutOfRange("affine dimension must be >= 1");
  std::vector<elem_t> coords;
  std::vector<elem_t> prefix;
  append_all_vectors(coords, prefix, n, field.q());
  return PointSet(field, n, std::move(coords));
}

std::vector<Monomial> monomials_of_degree(std::uint32_t n, std::uint32_t k) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> cur(n + 1, 0);
  compositions(out, cur, 0, k, k);
  return out;
}

Monomial reduce_monomial(const Monomial& m, std::uint32_t q) {
  Monomial r = m;
  for (auto& t : r.exponents) {
    if (t > 0) t = (t - 1) % (q - 1) + 1;
  }
  return r;
}

std::vector<Monomial> reduced_basis_monomials(std::uint32_t n, std::uint32_t k, std::uint32_t q) {
  if (k < 1) throw OutOfRange("reduced_basis_monomials requires k >= 1");
  std::vector<Monomial> out;
  std::vector<std::uint32_t> cur(n + 1, 0);
  for (std::int64_t t = k; t > 0; t -= (q - 1)) {
    compositions(out, cur, 0, static_cast<std::uint32_t>(t), q - 1);
  }
  return out;
}

std::vector<Monomial> affine_basis_monomials(std::uint32_t n, std::uint32_t k, std::uint32_t q) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> cur(n, 0);
  const std::uint32_t max_degree = std::min<std::uint64_t>(k, static_cast<std::uint64_t>(n) * (q - 1));
  for (std::uint32_t t = 0; t <= max_degree; ++t) compositions(out, cur, 0, t, q - 1);
  return out;
}

std::vector<elem_t> evaluate(const Monomial& m, const PointSet& points) {
  if (m.vars() != points.arity()) throw DimensionMismatch("monomial and points have different arity");
  const Field& f = points.field();
  const std::uint32_t q = f.q();
  // powers[j][x] = x^{a_j}
  std::vector<std::vector<elem_t>> powers(m.vars(), std::vector<elem_t>(q));
  for (std::size_t j = 0; j < m.vars(); ++j)
    for (std::uint32_t x = 0; x < q; ++x) powers[j][x] = f.pow(static_cast<elem_t>(x), m.exponents[j]);
  std::vector<elem_t> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto pt = points.point(i);
    elem_t v = 1;
    for (std::size_t j = 0; j < pt.size() && v != 0; ++j) v = f.mul(v, powers[j][pt[j]]);
    out[i] = v;
  }
  return out;
}

}  // namespace prmhull
