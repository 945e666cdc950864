#include "prmhull/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "prmhull/analyze.hpp"
#include "prmhull/harness.hpp"
#include "prmhull/prm.hpp"
#include "prmhull/report.hpp"

namespace prmhull {

namespace {

struct UsageError : Error {
  using Error::Error;
};

enum class Format { Table, Json, Csv };

struct Globals {
  std::optional<std::uint32_t> n, k, q;
  bool json = false;
  bool csv = false;
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
  std::optional<std::uint64_t> seed;
  std::string emit_path;
  std::string read_path;

  Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Table; }

  PrmParams params(bool require_proper) const {
    if (!n || !k || !q) throw UsageError("--n, --k and --q are required");
    Field::make(*q);
    if (*n < 1) throw UsageError("--n must be at least 1");
    PrmParams p{*n, *k, *q};
    if (require_proper && (p.k < 1 || p.k > p.max_degree())) {
      throw UsageError("this command needs 1 <= k <= n(q-1) = " + std::to_string(p.max_degree()));
    }
    return p;
  }

  EnumerationOptions enumeration() const {
    EnumerationOptions o;
    o.budget = budget;
    o.workers = std::max(1u, workers);
    return o;
  }

  void emit(const LinearCode& code) const {
    if (emit_path.empty()) return;
    std::ofstream f(emit_path);
    if (!f) throw UsageError("cannot write " + emit_path);
    write_matrix(f, code.generator());
  }

  /// The code named by --read-matrix, else C_{n,k}^q.
  LinearCode code(bool require_proper) const {
    if (!read_path.empty()) {
      std::ifstream f(read_path);
      if (!f) throw UsageError("cannot read " + read_path);
      return LinearCode::from_spanning(read_matrix(f), read_path);
    }
    LinearCode c = prm_code(params(require_proper));
    emit(c);
    return c;
  }
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::uint32_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v > 0xffffffffUL) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw UsageError(std::string("bad value in ") + what + ": '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(what) + " is empty");
  return out;
}

int cmd_params(const Globals& g, std::ostream& out) {
  const PrmParams p = g.params(false);
  const Regime reg = regime(p);
  const std::int64_t N = prm_length(p.n, p.q);
  std::int64_t K = 0, D = 0;
  std::optional<std::int64_t> ks, kmr;
  switch (reg) {
    case Regime::SpanOfOnes: K = 1; D = N; break;
    case Regime::FullSpace: K = N; D = 1; break;
    case Regime::Proper:
      ks = dim_sorensen(p);
      kmr = dim_mr(p);
      K = *ks;
      D = min_dist_formula(p);
      break;
  }
  if (!g.emit_path.empty()) g.emit(prm_code(p));
  if (g.format() == Format::Json) {
    Json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["q"] = p.q;
    j["regime"] = regime_name(reg);
    j["N"] = N;
    j["K"] = K;
    if (ks) {
      j["K_sorensen"] = *ks;
      j["K_mr"] = *kmr;
    }
    j["D_formula"] = D;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (g.format() == Format::Csv) {
    out << "n,k,q,regime,N,K,D_formula\n"
        << p.n << "," << p.k << "," << p.q << "," << regime_name(reg) << "," << N << "," << K << "," << D << "\n";
    return kExitOk;
  }
  out << "N=" << N << " K=" << K << " D=" << D << "\n";
  out << p.label() << " regime " << regime_name(reg);
  if (reg == Regime::FullSpace) out << ": full space F_" << p.q << "^" << N;
  if (reg == Regime::SpanOfOnes) out << ": span of the all-ones vector";
  out << "\n";
  if (ks) out << "K by alternating sum " << *ks << ", by correction form " << *kmr << "\n";
  return (ks && *ks != *kmr) ? kExitDisagree : kExitOk;
}

void print_report_table(const ClassificationReport& r, std::ostream& out) {
  out << r.params.label() << " [" << r.N << "," << r.K << "," << r.D_formula << "]\n";
  out << std::left << std::setw(18) << "" << std::setw(26) << "predicted" << "constructed\n";
  out << std::setw(18) << "self-dual" << std::setw(26) << yes_no(r.predicted.self_dual)
      << yes_no(r.constructed.self_dual) << "\n";
  out << std::setw(18) << "self-orthogonal" << std::setw(26) << yes_no(r.predicted.self_orthogonal)
      << yes_no(r.constructed.self_orthogonal) << "\n";
  out << std::setw(18) << "lcd" << std::setw(26) << yes_no(r.predicted.lcd) << yes_no(r.constructed.lcd) << "\n";
  const std::string ph =
      r.predicted_hull ? std::to_string(r.predicted_hull->dim) + " (" + r.predicted_hull->rule + ")" : "no-closed-form";
  out << std::setw(18) << "hull dim" << std::setw(26) << ph << r.constructed.hull_dim << "\n";
  out << std::setw(18) << "gram rank" << std::setw(26) << "" << r.constructed.gram_rank << "\n";
  out << "agree " << yes_no(r.agree) << "\n" << std::right;
}

int cmd_classify(const Globals& g, std::ostream& out) {
  const PrmParams p = g.params(true);
  const LinearCode code = prm_code(p);
  g.emit(code);
  const ClassificationReport r = classify(p, code, hull(code));
  switch (g.format()) {
    case Format::Json: out << to_json(r).dump(2) << "\n"; break;
    case Format::Csv: out << csv_header() << "\n" << csv_row(r) << "\n"; break;
    case Format::Table: print_report_table(r, out); break;
  }
  return r.agree ? kExitOk : kExitDisagree;
}

int cmd_hull(const Globals& g, bool emit_basis, std::ostream& out) {
  const bool from_file = !g.read_path.empty();
  const LinearCode code = g.code(true);
  const HullReport h = hull(code);
  std::optional<HullPrediction> predicted;
  std::optional<std::vector<Monomial>> basis;
  std::vector<bool> member;
  bool ok = true;
  if (!from_file) {
    const PrmParams p = g.params(true);
    predicted = hull_dim_predicted(p);
    if (predicted && predicted->dim != static_cast<std::int64_t>(h.hull_dim)) ok = false;
    if (emit_basis) {
      basis = hull_basis_predicted(p);
      if (basis) {
        const PointSet points = projective_points(code.field(), p.n);
        for (const auto& m : *basis) member.push_back(h.hull_basis.contains(evaluate(m, points)));
        for (bool b : member) ok = ok && b;
        ok = ok && basis->size() == h.hull_dim;
      }
    }
  }
  if (g.format() == Format::Json) {
    Json j = to_json(h, basis);
    j["label"] = code.label();
    j["K"] = code.dimension();
    if (predicted) {
      j["closed_form"] = predicted->dim;
      j["rule"] = predicted->rule;
    } else if (!from_file) {
      j["closed_form"] = "no-closed-form";
    }
    if (basis) j["basis_in_hull"] = member;
    j["agree"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << code.label() << " K=" << code.dimension() << "\n";
    out << "hull_dim " << h.hull_dim << "\n";
    out << "gram_rank " << h.gram_rank << "\n";
    if (predicted) {
      out << "closed_form " << predicted->dim << " (" << predicted->rule << ")\n";
    } else if (!from_file) {
      out << "closed_form no-closed-form\n";
    }
    if (emit_basis && !from_file) {
      if (basis) {
        for (std::size_t i = 0; i < basis->size(); ++i) {
          out << "  " << (*basis)[i].to_string() << (member[i] ? "  in hull" : "  NOT in hull") << "\n";
        }
      } else {
        out << "no predicted monomial basis for these parameters\n";
      }
    }
    if (!ok) out << "DISAGREEMENT\n";
  }
  return ok ? kExitOk : kExitDisagree;
}

int cmd_dual_check(const Globals& g, std::ostream& out) {
  const PrmParams p = g.params(true);
  const LinearCode code = prm_code(p);
  g.emit(code);
  const LinearCode d = dual(code);
  const LinearCode described = described_dual(p);
  const DualDescription desc = dual_description(p);
  const bool equal = equal_codes(d, described);
  std::optional<bool> ones_inside;
  if (desc.adjoin_ones && desc.ell > 0) {
    ones_inside = contains_vector(prm_code(code.field(), p.n, desc.ell), std::vector<elem_t>(code.length(), 1));
  }
  const bool ok = equal && !ones_inside.value_or(false);
  if (g.format() == Format::Json) {
    Json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["q"] = p.q;
    j["dual_dim"] = d.dimension();
    j["ell"] = desc.ell;
    j["adjoin_ones"] = desc.adjoin_ones;
    j["described"] = described.label();
    j["equal"] = equal;
    if (ones_inside) j["ones_in_C_ell"] = *ones_inside;
    j["agree"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << "dual of " << p.label() << " has dimension " << d.dimension() << "\n";
    out << "described as " << described.label() << "\n";
    out << "row spaces equal: " << yes_no(equal) << "\n";
    if (ones_inside) out << "all-ones in C_{n," << desc.ell << "}: " << yes_no(*ones_inside) << "\n";
    out << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitDisagree;
}

int cmd_wenum(const Globals& g, bool check_paper, std::ostream& out) {
  const LinearCode code = g.code(false);
  const WeightDistribution d = weight_distribution(code, g.enumeration());
  std::optional<CriterionResult> check;
  if (check_paper) check = check_enumerator(d, paper_reference());
  if (g.format() == Format::Json) {
    Json j;
    j["label"] = code.label();
    j["N"] = code.length();
    j["K"] = code.dimension();
    j["distribution"] = to_json(d);
    j["polynomial"] = d.polynomial();
    if (const auto md = d.min_distance()) j["min_distance"] = *md;
    if (check) j["check_paper"] = check->passed ? "PASS" : "FAIL";
    out << j.dump(2) << "\n";
  } else if (g.format() == Format::Csv) {
    out << "weight,count\n";
    for (std::size_t w = 0; w < d.counts.size(); ++w)
      if (d.counts[w]) out << w << "," << d.counts[w] << "\n";
  } else {
    out << d.polynomial() << "\n";
    if (check) out << (check->passed ? "PASS" : "FAIL") << ": " << check->detail << "\n";
  }
  return (!check || check->passed) ? kExitOk : kExitDisagree;
}

int cmd_design(const Globals& g, std::size_t w, unsigned t, std::ostream& out) {
  if (t < 1) throw UsageError("--t must be at least 1");
  const LinearCode code = g.code(false);
  const EnumerationResult r = enumerate_codewords(code, w, g.enumeration());
  const BlockFamily& family = r.supports;
  const auto lambda = family.blocks.empty() ? std::nullopt : design_lambda(family, t);
  const std::uint64_t words = w < r.distribution.counts.size() ? r.distribution.counts[w] : 0;
  if (g.format() == Format::Json) {
    Json j;
    j["label"] = code.label();
    j["weight"] = w;
    j["words"] = words;
    j["blocks"] = family.blocks.size();
    j["t"] = t;
    j["v"] = family.ground_size;
    if (lambda) {
      j["lambda"] = *lambda;
    } else {
      j["lambda"] = "NotADesign";
    }
    out << j.dump(2) << "\n";
  } else {
    out << code.label() << ": " << words << " words of weight " << w << ", " << family.blocks.size()
        << " blocks\n";
    if (lambda) {
      out << t << "-(" << family.ground_size << "," << w << "," << *lambda << ") design\n";
    } else {
      out << "NotADesign\n";
    }
  }
  return kExitOk;
}

int cmd_sweep(const Globals& g, const std::string& ns, const std::string& qs, const std::string& ks,
              const std::string& out_path, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  spec.ns = parse_list(ns, "--ns");
  spec.qs = parse_list(qs, "--qs");
  if (ks != "all") spec.ks = parse_list(ks, "--ks");
  spec.workers = std::max(1u, g.workers);
  validate(spec);
  const auto checks = run_sweep(spec);
  const auto sum = summarize(checks);

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw UsageError("cannot write " + out_path);
  }
  std::ostream& payload = out_path.empty() ? out : file;
  std::ostream& notes = (out_path.empty() && g.format() != Format::Table) ? err : out;

  if (g.format() == Format::Json) {
    Json arr = Json::array();
    for (const auto& c : checks) {
      Json j = to_json(c.report);
      Json fails = Json::array();
      for (const auto& f : c.failures) fails.push_back(f.detail);
      j["failures"] = fails;
      arr.push_back(j);
    }
    payload << arr.dump(2) << "\n";
  } else if (g.format() == Format::Csv) {
    payload << csv_header() << "\n";
    for (const auto& c : checks) payload << csv_row(c.report) << "\n";
  } else {
    payload << std::left << std::setw(14) << "(n,k,q)" << std::setw(6) << "K" << std::setw(28) << "predicted hull"
            << std::setw(8) << "hull" << "status\n";
    for (const auto& c : checks) {
      const auto& r = c.report;
      std::ostringstream id;
      id << "(" << r.params.n << "," << r.params.k << "," << r.params.q << ")";
      const std::string ph = r.predicted_hull ? std::to_string(r.predicted_hull->dim) + " " + r.predicted_hull->rule
                                              : "no-closed-form";
      payload << std::setw(14) << id.str() << std::setw(6) << r.K << std::setw(28) << ph << std::setw(8)
              << r.constructed.hull_dim << (c.ok() ? "ok" : "DISAGREE") << "\n";
    }
    payload << std::right;
  }
  for (const auto& c : checks)
    for (const auto& f : c.failures) notes << "disagreement [" << f.check << "] " << f.detail << "\n";
  notes << "summary: points=" << sum.points << " agree=" << sum.agree << " disagree=" << sum.disagree
        << " no-closed-form=" << sum.no_closed_form << "\n";
  return sum.disagree == 0 ? kExitOk : kExitDisagree;
}

int cmd_selftest(const Globals& g, bool full, std::ostream& out) {
  AcceptanceOptions o;
  o.full = full;
  o.workers = std::max(1u, g.workers);
  bool ok = true;
  run_acceptance(o, [&](const CriterionResult& r) {
    ok = ok && r.passed;
    out << format_result(r) << std::endl;
  });
  out << "selftest: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitInternal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hulls, duals and weight enumerators of projective Reed-Muller codes"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::uint32_t n = 0, k = 0, q = 0;
  auto* on = app.add_option("--n", n, "projective dimension n");
  auto* ok_ = app.add_option("--k", k, "degree k");
  auto* oq = app.add_option("--q", q, "field size q");
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--csv", g.csv, "CSV output");
  app.add_option("--budget", g.budget, "maximum number of messages q^K to enumerate")->capture_default_str();
  app.add_option("--workers", g.workers, "worker threads")->capture_default_str();
  std::uint64_t seed = 0;
  auto* oseed = app.add_option("--seed", seed, "reserved; every computation is deterministic");
  app.add_option("--emit-matrix", g.emit_path, "write the generator matrix to this file");
  app.add_option("--read-matrix", g.read_path, "analyze the code spanned by the matrix in this file");

  auto* params = app.add_subcommand("params", "length, dimension and minimum distance");
  auto* classify_cmd = app.add_subcommand("classify", "predicted vs constructed classification");
  auto* hull_cmd = app.add_subcommand("hull", "hull dimension and basis");
  bool basis = false;
  hull_cmd->add_flag("--basis", basis, "list the predicted monomial basis and check each member");
  auto* dual_cmd = app.add_subcommand("dual-check", "verify the described dual");
  auto* wenum = app.add_subcommand("wenum", "weight enumerator by exhaustive enumeration");
  bool check_paper = false;
  wenum->add_flag("--check-paper", check_paper, "compare with the published C_{3,3}^3 enumerator");
  auto* design = app.add_subcommand("design", "t-design test on minimum-weight supports");
  std::size_t w = 0;
  unsigned t = 2;
  design->add_option("--w", w, "codeword weight")->required();
  design->add_option("--t", t, "design strength")->capture_default_str();
  auto* sweep = app.add_subcommand("sweep", "classify every point of a parameter grid");
  std::string ns = "1,2,3", qs = "2,3,4,5,7,8,9", ks = "all", out_path;
  sweep->add_option("--ns", ns, "comma-separated n values")->capture_default_str();
  sweep->add_option("--qs", qs, "comma-separated q values")->capture_default_str();
  sweep->add_option("--ks", ks, "'all' or comma-separated k values")->capture_default_str();
  sweep->add_option("--out", out_path, "write the report here instead of stdout");
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  bool full = false;
  selftest->add_flag("--full", full, "include the 3^20 enumeration");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  if (*on) g.n = n;
  if (*ok_) g.k = k;
  if (*oq) g.q = q;
  if (*oseed) g.seed = seed;
  if (g.json && g.csv) {
    err << "--json and --csv are exclusive\n";
    return kExitUsage;
  }

  try {
    if (*params) return cmd_params(g, out);
    if (*classify_cmd) return cmd_classify(g, out);
    if (*hull_cmd) return cmd_hull(g, basis, out);
    if (*dual_cmd) return cmd_dual_check(g, out);
    if (*wenum) return cmd_wenum(g, check_paper, out);
    if (*design) return cmd_design(g, w, t, out);
    if (*sweep) return cmd_sweep(g, ns, qs, ks, out_path, out, err);
    if (*selftest) return cmd_selftest(g, full, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotPrimePower& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OutOfRange& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace prmhull
