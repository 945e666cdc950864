#include "prmhull/prm.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace prmhull {

using boost::multiprecision::cpp_int;

namespace {

std::int64_t to_i64(const cpp_int& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw OutOfRange(std::string(what) + " does not fit in 64 bits");
  }
  return v.convert_to<std::int64_t>();
}

cpp_int big_binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return 0;
  b = std::min(b, a - b);
  cpp_int r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    r *= (a - b + i);
    r /= i;
  }
  return r;
}

void require_proper(const PrmParams& p, const char* op) {
  if (p.n < 1 || p.q < 2 || p.k < 1 || p.k > p.max_degree()) {
    throw OutOfRange(std::string(op) + " requires 1 <= k <= n(q-1); got " + p.label());
  }
}

cpp_int sorensen_sum(const PrmParams& p) {
  const std::int64_t n = p.n, k = p.k, q = p.q;
  cpp_int total = 0;
  for (std::int64_t t = k; t > 0; t -= (q - 1)) {
    cpp_int inner = 0;
    for (std::int64_t j = 0; j <= n + 1; ++j) {
      const cpp_int term = big_binomial(n + 1, j) * big_binomial(t - j * q + n, t - j * q);
      inner += (j % 2 == 0) ? term : cpp_int(-term);
    }
    total += inner;
  }
  return total;
}

}  // namespace

std::string PrmParams::label() const {
  return "PRM(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",q=" + std::to_string(q) + ")";
}

Regime regime(const PrmParams& p) {
  if (p.k == 0) return Regime::SpanOfOnes;
  if (p.k <= p.max_degree()) return Regime::Proper;
  return Regime::FullSpace;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::SpanOfOnes: return "span-1";
    case Regime::Proper: return "proper";
    case Regime::FullSpace: return "trivial";
  }
  return "?";
}

std::int64_t binomial(std::int64_t a, std::int64_t b) { return to_i64(big_binomial(a, b), "binomial"); }

std::int64_t prm_length(std::uint32_t n, std::uint32_t q) {
  cpp_int qq = q;
  cpp_int num = boost::multiprecision::pow(qq, n + 1) - 1;
  return to_i64(num / (q - 1), "length");
}

std::vector<Monomial> prm_basis_monomials(const PrmParams& p) {
  if (p.k == 0) return {};
  return reduced_basis_monomials(p.n, p.k, p.q);
}

LinearCode prm_code(const Field& field, std::uint32_t n, std::uint32_t k) {
  const PrmParams p{n, k, field.q()};
  const PointSet points = projective_points(field, n);
  const std::size_t N = points.size();
  Matrix g(field, 0, N);
  if (k == 0) {
    g.append_row(std::vector<elem_t>(N, 1));
  } else {
    for (const auto& m : reduced_basis_monomials(n, k, field.q())) g.append_row(evaluate(m, points));
  }
  LinearCode code(std::move(g), p.label());
  std::int64_t expected = 0;
  switch (regime(p)) {
    case Regime::SpanOfOnes: expected = 1; break;
    case Regime::Proper: expected = dim_sorensen(p); break;
    case Regime::FullSpace: expected = static_cast<std::int64_t>(N); break;
  }
  if (static_cast<std::int64_t>(code.dimension()) != expected) {
    throw InternalInconsistency(p.label() + ": constructed dimension " + std::to_string(code.dimension()) +
                                " != " + std::to_string(expected));
  }
  return code;
}

LinearCode prm_code(const PrmParams& p) { return prm_code(Field::make(p.q), p.n, p.k); }

LinearCode arm_code(std::uint32_t n, std::uint32_t k, std::uint32_t q) {
  const Field field = Field::make(q);
  const PointSet points = affine_points(field, n);
  Matrix g(field, 0, points.size());
  for (const auto& m : affine_basis_monomials(n, k, q)) g.append_row(evaluate(m, points));
  return LinearCode(std::move(g),
                    "ARM(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",q=" + std::to_string(q) + ")");
}

std::int64_t dim_sorensen(const PrmParams& p) {
  require_proper(p, "dim_sorensen");
  return to_i64(sorensen_sum(p), "dimension");
}

std::int64_t dim_mr(const PrmParams& p) {
  require_proper(p, "dim_mr");
  const std::int64_t n = p.n, k = p.k, q = p.q;
  cpp_int correction = 0;
  for (std::int64_t j = 2; j <= n + 1; ++j) {
    cpp_int inner = 0;
    for (std::int64_t i = 0; i <= j - 2; ++i) {
      const std::int64_t b = k + (i + 1) * (q - 1) - j * q;
      inner += big_binomial(b + n, b);
    }
    const cpp_int term = big_binomial(n + 1, j) * inner;
    correction += (j % 2 == 0) ? term : cpp_int(-term);
  }
  return to_i64(big_binomial(n + k, k) - correction, "dimension");
}

std::int64_t min_dist_formula(const PrmParams& p) {
  require_proper(p, "min_dist_formula");
  const std::int64_t q = p.q;
  const std::int64_t r = (p.k - 1) / (q - 1);
  const std::int64_t s = (p.k - 1) % (q - 1);
  cpp_int d = cpp_int(q - s) * boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(p.n - r - 1));
  const std::int64_t D = to_i64(d, "distance");
  if (p.k < p.q) {
    const cpp_int lachaud = cpp_int(q - p.k + 1) * boost::multiprecision::pow(cpp_int(q), p.n - 1);
    if (lachaud != d) throw InternalInconsistency("distance formulas disagree for " + p.label());
  }
  return D;
}

DualDescription dual_description(const PrmParams& p) {
  require_proper(p, "dual_description");
  return DualDescription{p.max_degree() - p.k, p.k % (p.q - 1) == 0};
}

LinearCode described_dual(const PrmParams& p) {
  const DualDescription d = dual_description(p);
  const Field field = Field::make(p.q);
  LinearCode base = prm_code(field, p.n, d.ell);
  if (!d.adjoin_ones || d.ell == 0) return base;
  Matrix g = base.generator();
  g.append_row(std::vector<elem_t>(base.length(), 1));
  return LinearCode::from_spanning(g, "span{1, " + base.label() + "}");
}

PredictedClass classify_predicted(const PrmParams& p) {
  require_proper(p, "classify_predicted");
  const std::uint32_t Q = p.q - 1, M = p.max_degree();
  PredictedClass c;
  c.self_dual = (p.q % 2 == 1) && (p.n % 2 == 1) && 2 * p.k == M;
  c.self_orthogonal = 2 * p.k <= M && (2 * p.k) % Q == 0;
  c.lcd = p.k == M;
  return c;
}

std::optional<HullPrediction> hull_dim_predicted(const PrmParams& p) {
  require_proper(p, "hull_dim_predicted");
  const std::int64_t n = p.n, k = p.k, Q = p.q - 1, M = n * Q, ell = M - k;
  std::vector<HullPrediction> hits;
  auto K = [&](std::int64_t deg) { return dim_sorensen(PrmParams{p.n, static_cast<std::uint32_t>(deg), p.q}); };

  if (2 * k < Q) hits.push_back({K(k) - 1, "q>2k+1"});
  if (2 * ell < Q) hits.push_back({binomial(n + ell, ell) - 1, "q>2l+1 (dual)"});
  if (Q < 2 * k && k < Q) hits.push_back({K(k) - (2 * k + 1 - Q), "(q-1)/2<k<q-1"});
  if ((n - 1) * Q < k && 2 * k < 2 * M - Q) {
    hits.push_back({binomial(n + ell, ell) - (2 * ell + 1 - Q), "(q-1)/2<l<q-1 (dual)"});
  }
  if (2 * k <= M && (2 * k) % Q == 0) hits.push_back({K(k), "self-orthogonal"});
  if (2 * k >= M && (2 * k) % Q == 0 && k % Q != 0) hits.push_back({K(ell), "dual self-orthogonal"});

  if (hits.empty()) return std::nullopt;
  for (const auto& h : hits) {
    if (h.dim != hits.front().dim) {
      throw InternalInconsistency("closed forms '" + hits.front().rule + "' and '" + h.rule + "' disagree for " +
                                  p.label());
    }
  }
  return hits.front();
}

std::optional<std::vector<Monomial>> hull_basis_predicted(const PrmParams& p) {
  require_proper(p, "hull_basis_predicted");
  const std::uint32_t n = p.n, k = p.k, Q = p.q - 1;
  std::vector<Monomial> all = monomials_of_degree(n, k);
  std::vector<Monomial> excluded;
  if (p.q > 2 * k + 1) {
    excluded.push_back(Monomial::power_of(n + 1, n, k));
  } else if (Q < 2 * k && k < Q) {
    for (std::uint32_t a = Q - k; a <= k; ++a) {
      Monomial m{std::vector<std::uint32_t>(n + 1, 0)};
      m.exponents[n - 1] = k - a;
      m.exponents[n] = a;
      excluded.push_back(std::move(m));
    }
  } else {
    return std::nullopt;
  }
  std::erase_if(all, [&](const Monomial& m) { return std::find(excluded.begin(), excluded.end(), m) != excluded.end(); });
  return all;
}

std::int64_t rsj_hull_dim(std::uint32_t k, std::uint32_t q) {
  const std::uint32_t Q = q - 1;
  if (k < 1 || k > 2 * Q) throw OutOfRange("rsj_hull_dim requires 1 <= k <= 2(q-1)");
  if (k <= Q) {
    if ((2 * k) % Q == 0) return binomial(k + 2, 2);
    return binomial(k + 1, 2) + std::min<std::int64_t>(k, static_cast<std::int64_t>(q) - k - 1);
  }
  const std::uint32_t ell = 2 * Q - k;
  if (ell == 0) return 0;
  return rsj_hull_dim(ell, q);
}

std::vector<elem_t> lcd_witness(const PrmParams& p) {
  if (p.k < 1 || p.k >= p.max_degree()) throw OutOfRange("lcd_witness requires 1 <= k < n(q-1)");
  const Field field = Field::make(p.q);
  return evaluate(Monomial::power_of(p.n + 1, 0, p.k), projective_points(field, p.n));
}

ClassificationReport classify(const PrmParams& p, const LinearCode& code, const HullReport& h) {
  ClassificationReport r;
  r.params = p;
  r.N = static_cast<std::int64_t>(code.length());
  r.K = static_cast<std::int64_t>(code.dimension());
  r.D_formula = min_dist_formula(p);
  r.predicted = classify_predicted(p);
  r.predicted_hull = hull_dim_predicted(p);
  r.constructed.hull_dim = h.hull_dim;
  r.constructed.gram_rank = h.gram_rank;
  r.constructed.self_orthogonal = h.gram_rank == 0;
  r.constructed.lcd = h.gram_rank == code.dimension();
  r.constructed.self_dual = r.constructed.self_orthogonal && 2 * code.dimension() == code.length();
  r.agree = r.predicted.self_dual == r.constructed.self_dual &&
            r.predicted.self_orthogonal == r.constructed.self_orthogonal && r.predicted.lcd == r.constructed.lcd &&
            (!r.predicted_hull || r.predicted_hull->dim == static_cast<std::int64_t>(h.hull_dim));
  return r;
}

ClassificationReport classify(const PrmParams& p) {
  require_proper(p, "classify");
  const LinearCode code = prm_code(p);
  return classify(p, code, hull(code));
}

}  // namespace prmhull
