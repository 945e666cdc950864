#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prmhull/analyze.hpp"
#include "prmhull/prm.hpp"

namespace prmhull {

struct SweepSpec {
  std::vector<std::uint32_t> ns{1, 2, 3};
  std::vector<std::uint32_t> qs{2, 3, 4, 5, 7, 8, 9};
  std::optional<std::vector<std::uint32_t>> ks;  // nullopt = every 1 <= k <= n(q-1)
  unsigned workers = 1;
};

/// Throws NotPrimePower for a bad q and OutOfRange for empty ranges.
void validate(const SweepSpec& spec);

/// Points in (n, q, k) order; explicit ks outside 1..n(q-1) are skipped.
std::vector<PrmParams> sweep_points(const SweepSpec& spec);

struct CheckFailure {
  std::string check;  // "dimension", "dual", "classify", "hull", "ones", "witness", "dual-hull", "rsj", "basis", "monotone", "error"
  std::string detail;
};

/// Everything measured at one sweep point. Each failed check appends an
/// entry to `failures`.
struct PointCheck {
  ClassificationReport report;
  std::int64_t dim_sorensen = 0;
  std::int64_t dim_mr = 0;
  std::size_t rank = 0;
  std::size_t dual_hull_dim = 0;
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }
  bool no_closed_form() const { return !report.predicted_hull; }
};

PointCheck check_point(const PrmParams& p);

/// check_point over every point, spread across spec.workers threads;
/// results keep the order of sweep_points.
std::vector<PointCheck> run_sweep(const SweepSpec& spec);

struct SweepSummary {
  std::size_t points = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t no_closed_form = 0;
};

SweepSummary summarize(const std::vector<PointCheck>& checks);

/// Published reference data for C_{3,3}^3.
struct ReferenceData {
  std::map<std::size_t, std::uint64_t> enumerator;  // w -> A_w, every other A_w is 0
  std::size_t design_weight = 9;
  std::size_t design_blocks = 520;
  unsigned design_t = 2;
  std::uint64_t design_lambda = 24;
};

ReferenceData paper_reference();

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0;
};

/// Compares a distribution with the reference enumerator.
CriterionResult check_enumerator(const WeightDistribution& d, const ReferenceData& ref);
/// Compares weight-w counts and supports with the reference design data.
CriterionResult check_design(const WeightDistribution& d, const BlockFamily& blocks, const ReferenceData& ref);

struct AcceptanceOptions {
  /// Includes the 3^20 enumeration of C_{3,3}^3.
  bool full = false;
  unsigned workers = 1;
  ReferenceData reference = paper_reference();
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result(const CriterionResult& r);

}  // namespace prmhull
