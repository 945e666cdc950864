#include "prmhull/harness.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace prmhull {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string params_text(const PrmParams& p) {
  return "(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.q) + ")";
}

template <typename F>
void parallel_for(std::size_t count, unsigned workers, F&& body) {
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (threads == 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
}

void measure(const PrmParams& p, PointCheck& c) {
  auto fail = [&](const char* check, const std::string& detail) {
    c.failures.push_back({check, params_text(p) + ": " + detail});
  };
  const Field field = Field::make(p.q);
  const std::uint32_t M = p.max_degree();

  c.dim_sorensen = dim_sorensen(p);
  c.dim_mr = dim_mr(p);
  const LinearCode code = prm_code(field, p.n, p.k);
  c.rank = rank(code.generator());
  if (c.dim_sorensen != c.dim_mr || c.dim_mr != static_cast<std::int64_t>(c.rank)) {
    fail("dimension", "sorensen " + std::to_string(c.dim_sorensen) + ", mr " + std::to_string(c.dim_mr) +
                          ", rank " + std::to_string(c.rank));
  }
  if (p.k < M && dim_sorensen(PrmParams{p.n, p.k + 1, p.q}) <= c.dim_sorensen) {
    fail("monotone", "dimension does not grow from k to k+1");
  }

  const HullReport h = hull(code);
  c.report = classify(p, code, h);
  if (!c.report.agree) fail("classify", "predicted and constructed classification differ");
  const std::size_t K = code.dimension();
  if (c.report.predicted_hull) {
    const auto want = c.report.predicted_hull->dim;
    if (static_cast<std::int64_t>(h.hull_dim) != want || static_cast<std::int64_t>(K - h.gram_rank) != want) {
      fail("hull", "closed form " + std::to_string(want) + ", intersection " + std::to_string(h.hull_dim) +
                       ", K - gram rank " + std::to_string(K - h.gram_rank));
    }
  } else if (h.hull_dim != K - h.gram_rank) {
    fail("hull", "intersection and Gram rank disagree");
  }

  const LinearCode d = dual(code);
  if (!equal_codes(d, described_dual(p))) fail("dual", "dual differs from its described form");
  const DualDescription desc = dual_description(p);
  if (desc.adjoin_ones && desc.ell > 0) {
    const std::vector<elem_t> ones(code.length(), 1);
    if (contains_vector(prm_code(field, p.n, desc.ell), ones)) fail("ones", "all-ones vector lies in C_{n,l}");
  }

  if (p.k < M) {
    const auto w = lcd_witness(p);
    const bool nonzero = std::any_of(w.begin(), w.end(), [](elem_t x) { return x != 0; });
    if (!nonzero || !h.hull_basis.contains(w)) fail("witness", "ev(x_0^k) is not a nonzero hull vector");
  }

  c.dual_hull_dim = hull(d).hull_dim;
  if (c.dual_hull_dim != h.hull_dim) fail("dual-hull", "hull(C^perp) has dimension " + std::to_string(c.dual_hull_dim));

  if (p.n == 2 && p.q >= 3) {
    const auto rsj = rsj_hull_dim(p.k, p.q);
    if (rsj != static_cast<std::int64_t>(h.hull_dim)) fail("rsj", "plane formula gives " + std::to_string(rsj));
  }

  if (const auto basis = hull_basis_predicted(p)) {
    const PointSet points = projective_points(field, p.n);
    Matrix rows(field, 0, code.length());
    bool inside = true;
    for (const auto& m : *basis) {
      const auto v = evaluate(m, points);
      inside = inside && h.hull_basis.contains(v);
      rows.append_row(v);
    }
    if (!inside || basis->size() != h.hull_dim || rank(rows) != basis->size()) {
      fail("basis", "predicted monomial basis does not span the hull");
    }
  }
}

}  // namespace

void validate(const SweepSpec& spec) {
  if (spec.ns.empty() || spec.qs.empty()) throw OutOfRange("sweep needs at least one n and one q");
  if (spec.ks && spec.ks->empty()) throw OutOfRange("sweep k list is empty");
  for (auto n : spec.ns)
    if (n < 1) throw OutOfRange("sweep n must be >= 1");
  for (auto q : spec.qs) Field::make(q);
}

std::vector<PrmParams> sweep_points(const SweepSpec& spec) {
  validate(spec);
  std::vector<PrmParams> points;
  for (auto n : spec.ns) {
    for (auto q : spec.qs) {
      const std::uint32_t M = n * (q - 1);
      if (spec.ks) {
        for (auto k : *spec.ks)
          if (k >= 1 && k <= M) points.push_back({n, k, q});
      } else {
        for (std::uint32_t k = 1; k <= M; ++k) points.push_back({n, k, q});
      }
    }
  }
  return points;
}

PointCheck check_point(const PrmParams& p) {
  PointCheck c;
  c.report.params = p;
  try {
    measure(p, c);
  } catch (const Error& e) {
    c.failures.push_back({"error", params_text(p) + ": " + e.what()});
  }
  return c;
}

std::vector<PointCheck> run_sweep(const SweepSpec& spec) {
  const auto points = sweep_points(spec);
  std::vector<PointCheck> out(points.size());
  parallel_for(points.size(), spec.workers, [&](std::size_t i) { out[i] = check_point(points[i]); });
  return out;
}

SweepSummary summarize(const std::vector<PointCheck>& checks) {
  SweepSummary s;
  for (const auto& c : checks) {
    ++s.points;
    if (c.ok()) {
      ++s.agree;
    } else {
      ++s.disagree;
    }
    if (c.no_closed_form()) ++s.no_closed_form;
  }
  return s;
}

ReferenceData paper_reference() {
  ReferenceData r;
  r.enumerator = {{0, 1},
                  {9, 1040},
                  {12, 18720},
                  {15, 1100736},
                  {18, 25761840},
                  {21, 236377440},
                  {24, 908079120},
                  {27, 1388750720},
                  {30, 783679104},
                  {33, 137535840},
                  {36, 5468320},
                  {39, 11520}};
  return r;
}

CriterionResult check_enumerator(const WeightDistribution& d, const ReferenceData& ref) {
  CriterionResult r;
  r.id = 4;
  r.name = "weight enumerator of C_{3,3}^3";
  std::size_t mismatches = 0;
  std::ostringstream detail;
  for (std::size_t w = 0; w < d.counts.size(); ++w) {
    const auto it = ref.enumerator.find(w);
    const std::uint64_t want = it == ref.enumerator.end() ? 0 : it->second;
    if (d.counts[w] != want) {
      if (mismatches < 4) detail << "A_" << w << "=" << d.counts[w] << " expected " << want << "; ";
      ++mismatches;
    }
  }
  for (const auto& [w, count] : ref.enumerator) {
    if (w >= d.counts.size()) {
      detail << "A_" << w << " beyond length; ";
      ++mismatches;
    }
  }
  r.passed = mismatches == 0;
  if (r.passed) {
    detail << ref.enumerator.size() << " nonzero coefficients match, total " << d.total();
  } else {
    detail << mismatches << " coefficient(s) differ";
  }
  r.detail = detail.str();
  return r;
}

CriterionResult check_design(const WeightDistribution& d, const BlockFamily& blocks, const ReferenceData& ref) {
  CriterionResult r;
  r.id = 5;
  r.name = "2-design from weight-9 supports";
  const auto it = ref.enumerator.find(ref.design_weight);
  const std::uint64_t want_words = it == ref.enumerator.end() ? 0 : it->second;
  const std::uint64_t words = ref.design_weight < d.counts.size() ? d.counts[ref.design_weight] : 0;
  const auto lambda = design_lambda(blocks, ref.design_t);
  const std::size_t v = blocks.ground_size;
  const std::uint64_t pairs = v * (v - 1) / 2;
  std::ostringstream detail;
  detail << words << " words of weight " << ref.design_weight << ", " << blocks.blocks.size() << " blocks, ";
  if (lambda) {
    detail << ref.design_t << "-(" << v << "," << ref.design_weight << "," << *lambda << ") over " << pairs
           << " pairs";
  } else {
    detail << "not a design";
  }
  r.passed = words == want_words && blocks.blocks.size() == ref.design_blocks && lambda &&
             *lambda == ref.design_lambda;
  r.detail = detail.str();
  return r;
}

namespace {

struct Shared {
  std::vector<PointCheck> sweep;
  double sweep_seconds = 0;
  bool have_sweep = false;
  std::optional<EnumerationResult> c333;
  double c333_seconds = 0;
};

const std::vector<PointCheck>& sweep_once(Shared& s, unsigned workers) {
  if (!s.have_sweep) {
    const auto start = Clock::now();
    SweepSpec spec;
    spec.workers = workers;
    s.sweep = run_sweep(spec);
    s.sweep_seconds = seconds_since(start);
    s.have_sweep = true;
  }
  return s.sweep;
}

std::string first_failures(const std::vector<CheckFailure>& f, std::size_t limit = 3) {
  std::string out;
  for (std::size_t i = 0; i < f.size() && i < limit; ++i) out += "; " + f[i].detail;
  return out;
}

CriterionResult criterion_parameters(const AcceptanceOptions& o, Shared& s) {
  CriterionResult r;
  r.id = 1;
  r.name = "parameter reproduction";
  struct Expected {
    PrmParams p;
    std::size_t N, K, D;
  };
  const Expected cases[] = {{{1, 1, 3}, 4, 2, 3},
                            {{3, 3, 3}, 40, 20, 9},
                            {{1, 2, 5}, 6, 3, 4},
                            {{2, 1, 3}, 13, 3, 9},
                            {{2, 2, 5}, 31, 6, 20}};
  std::ostringstream detail;
  bool ok = true;
  for (const auto& e : cases) {
    const LinearCode code = prm_code(e.p);
    std::optional<std::size_t> D;
    if (e.p == PrmParams{3, 3, 3}) {
      if (s.c333) D = s.c333->distribution.min_distance();
    } else {
      EnumerationOptions eo;
      eo.workers = o.workers;
      D = min_distance(code, eo);
    }
    const bool good = code.length() == e.N && code.dimension() == e.K && (!D || *D == e.D) &&
                      static_cast<std::size_t>(min_dist_formula(e.p)) == e.D;
    ok = ok && good;
    detail << params_text(e.p) << "=[" << code.length() << "," << code.dimension() << ",";
    if (D) {
      detail << *D;
    } else {
      detail << "D not enumerated";
    }
    detail << "]" << (good ? "" : " MISMATCH") << " ";
  }
  if (!s.c333) detail << "(C_{3,3}^3 distance needs --full)";
  r.passed = ok;
  r.detail = detail.str();
  return r;
}

CriterionResult criterion_sweep(const AcceptanceOptions& o, Shared& s) {
  CriterionResult r;
  r.id = 2;
  r.name = "formula cross-validation sweep";
  const auto& sweep = sweep_once(s, o.workers);
  static const std::set<std::string> mine = {"dimension", "dual", "classify", "hull", "error"};
  std::vector<CheckFailure> bad;
  for (const auto& c : sweep)
    for (const auto& f : c.failures)
      if (mine.count(f.check)) bad.push_back(f);
  const auto sum = summarize(sweep);
  std::ostringstream detail;
  detail << sum.points << " points, " << bad.size() << " disagreements, " << sum.no_closed_form
         << " no-closed-form, sweep " << static_cast<int>(s.sweep_seconds) << " s";
  r.passed = bad.empty() && !sweep.empty() && (o.workers > 1 || s.sweep_seconds <= 600);
  r.detail = detail.str() + first_failures(bad);
  return r;
}

CriterionResult criterion_distance(const AcceptanceOptions& o) {
  CriterionResult r;
  r.id = 3;
  r.name = "exhaustive distance vs formula";
  constexpr std::uint64_t kLimit = 10'000'000;
  std::size_t codes = 0, compared = 0;
  std::vector<std::string> bad;
  for (const auto& p : sweep_points(SweepSpec{})) {
    const std::int64_t K = dim_sorensen(p);
    const auto count = message_count(p.q, static_cast<std::size_t>(K));
    if (!count || *count > kLimit) continue;
    ++codes;
    const LinearCode code = prm_code(p);
    EnumerationOptions eo;
    eo.workers = o.workers;
    const auto D = min_distance(code, eo);
    const auto want = static_cast<std::size_t>(min_dist_formula(p));
    if (D != want) bad.push_back(params_text(p) + " d=" + std::to_string(D) + " formula " + std::to_string(want));

    const auto dist = weight_distribution(code, eo);
    bool ok = dist.total() == *count && dist.counts[0] == 1 && dist.min_distance() == want;
    for (std::size_t w = 1; w < dist.counts.size(); ++w) ok = ok && dist.counts[w] % (p.q - 1) == 0;
    if (p.q == 3 && *count <= 1'000'000) {
      EnumerationOptions generic = eo;
      generic.allow_packed = false;
      ok = ok && weight_distribution(code, generic) == dist;
      ++compared;
    }
    if (!ok) bad.push_back(params_text(p) + " distribution invariants");
  }
  std::ostringstream detail;
  detail << codes << " codes with q^K <= 10^7, " << bad.size() << " mismatches, " << compared
         << " packed/generic comparisons";
  for (std::size_t i = 0; i < bad.size() && i < 3; ++i) detail << "; " << bad[i];
  r.passed = bad.empty() && codes > 0;
  r.detail = detail.str();
  return r;
}

CriterionResult criterion_enumerator(const AcceptanceOptions& o, Shared& s) {
  if (!s.c333) {
    CriterionResult r;
    r.id = 4;
    r.name = "weight enumerator of C_{3,3}^3";
    r.skipped = true;
    r.passed = true;
    r.detail = "3^20 enumeration skipped (needs --full)";
    return r;
  }
  CriterionResult r = check_enumerator(s.c333->distribution, o.reference);
  r.seconds = s.c333_seconds;
  r.detail += std::string(", ") + (s.c333->packed ? "packed" : "generic") + " path, " +
              std::to_string(static_cast<int>(s.c333_seconds)) + " s";
  if (o.workers <= 1 && s.c333_seconds > 900) {
    r.passed = false;
    r.detail += " (over 15 min)";
  }
  return r;
}

CriterionResult criterion_design(const AcceptanceOptions& o, Shared& s) {
  if (!s.c333) {
    CriterionResult r;
    r.id = 5;
    r.name = "2-design from weight-9 supports";
    r.skipped = true;
    r.passed = true;
    r.detail = "needs the 3^20 enumeration (--full)";
    return r;
  }
  return check_design(s.c333->distribution, s.c333->supports, o.reference);
}

CriterionResult criterion_properties(const AcceptanceOptions& o, Shared& s) {
  CriterionResult r;
  r.id = 6;
  r.name = "property suites";
  std::vector<std::string> bad;
  std::size_t checks = 0;
  const SweepSpec defaults;

  for (auto q : defaults.qs) {
    const Field f = Field::make(q);
    for (std::uint64_t e = 0; e <= 2 * q; ++e) {
      ++checks;
      const elem_t want = (e > 0 && e % (q - 1) == 0) ? f.neg(1) : 0;
      if (power_sum(f, e).index() != want) bad.push_back("power_sum q=" + std::to_string(q) + " r=" + std::to_string(e));
    }
  }

  std::mt19937_64 rng(20240601);
  for (auto q : defaults.qs) {
    const Field f = Field::make(q);
    const PointSet pts = projective_points(f, 2);
    std::uniform_int_distribution<std::uint32_t> exp(0, 3 * q);
    for (int i = 0; i < 1000; ++i) {
      Monomial m{{exp(rng), exp(rng), exp(rng)}};
      ++checks;
      if (evaluate(m, pts) != evaluate(reduce_monomial(m, q), pts)) {
        bad.push_back("reduce q=" + std::to_string(q) + " " + m.to_string());
      }
    }
  }

  static const std::set<std::string> mine = {"monotone", "ones", "witness", "dual-hull", "rsj", "basis"};
  const auto& sweep = sweep_once(s, o.workers);
  std::size_t rsj_points = 0;
  for (const auto& c : sweep) {
    if (c.report.params.n == 2 && c.report.params.q >= 3) ++rsj_points;
    checks += 6;
    for (const auto& f : c.failures)
      if (mine.count(f.check)) bad.push_back(f.detail);
  }
  for (std::size_t i = 1; i < sweep.size(); ++i) {
    const auto& a = sweep[i - 1].report.params;
    const auto& b = sweep[i].report.params;
    if (a.n == b.n && a.q == b.q && b.k == a.k + 1 && sweep[i].rank <= sweep[i - 1].rank) {
      bad.push_back("rank not increasing at " + params_text(b));
    }
  }
  std::ostringstream detail;
  detail << checks << " checks, " << rsj_points << " plane points, " << bad.size() << " failures";
  for (std::size_t i = 0; i < bad.size() && i < 3; ++i) detail << "; " << bad[i];
  r.passed = bad.empty();
  r.detail = detail.str();
  return r;
}

CriterionResult criterion_no_closed_form(const AcceptanceOptions& o, Shared& s) {
  CriterionResult r;
  r.id = 7;
  r.name = "no-closed-form coverage";
  const auto& sweep = sweep_once(s, o.workers);
  std::vector<std::string> hits;
  bool has_344 = false;
  for (const auto& c : sweep) {
    const auto& p = c.report.params;
    const std::uint32_t Q = p.q - 1;
    if (p.k > Q && 2 * p.k < 3 * Q && c.no_closed_form() && c.ok()) {
      hits.push_back(params_text(p) + " hull " + std::to_string(c.report.constructed.hull_dim));
      if (p == PrmParams{3, 4, 4}) has_344 = true;
    }
  }
  std::ostringstream detail;
  detail << hits.size() << " points with q-1<k<3(q-1)/2 reported constructively";
  for (std::size_t i = 0; i < hits.size() && i < 4; ++i) detail << "; " << hits[i];
  r.passed = !hits.empty() && has_344;
  r.detail = detail.str();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  Shared shared;
  std::vector<CriterionResult> results;
  auto record = [&](int id, const char* name, auto&& fn) {
    const auto start = Clock::now();
    CriterionResult r;
    try {
      r = fn();
    } catch (const Error& e) {
      r.id = id;
      r.name = name;
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    if (r.seconds == 0) r.seconds = seconds_since(start);
    results.push_back(r);
    if (on_result) on_result(r);
  };

  if (options.full) {
    const auto start = Clock::now();
    EnumerationOptions eo;
    eo.workers = options.workers;
    shared.c333 = enumerate_codewords(prm_code(PrmParams{3, 3, 3}), options.reference.design_weight, eo);
    shared.c333_seconds = seconds_since(start);
  }
  record(1, "parameter reproduction", [&] { return criterion_parameters(options, shared); });
  record(2, "formula cross-validation sweep", [&] { return criterion_sweep(options, shared); });
  record(3, "exhaustive distance vs formula", [&] { return criterion_distance(options); });
  record(4, "weight enumerator of C_{3,3}^3", [&] { return criterion_enumerator(options, shared); });
  record(5, "2-design from weight-9 supports", [&] { return criterion_design(options, shared); });
  record(6, "property suites", [&] { return criterion_properties(options, shared); });
  record(7, "no-closed-form coverage", [&] { return criterion_no_closed_form(options, shared); });
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " ("
      << std::fixed;
  out.precision(1);
  out << r.seconds << " s): " << r.detail;
  return out.str();
}

}  // namespace prmhull
