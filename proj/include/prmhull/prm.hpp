#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prmhull/code.hpp"
#include "prmhull/geometry.hpp"

namespace prmhull {

/// Projective Reed-Muller code C_{n,k}^q parameters.
struct PrmParams {
  std::uint32_t n = 1;
  std::uint32_t k = 0;
  std::uint32_t q = 2;

  std::uint32_t max_degree() const { return n * (q - 1); }  // n(q-1)
  std::string label() const;

  friend bool operator==(const PrmParams&, const PrmParams&) = default;
};

enum class Regime {
  SpanOfOnes,  // k = 0
  Proper,      // 1 <= k <= n(q-1)
  FullSpace,   // k > n(q-1)
};

Regime regime(const PrmParams& p);
const char* regime_name(Regime r);

/// C(a, b) with C(a, b) = 0 for b < 0 or a < b. Exact; throws OutOfRange if
/// the value does not fit in int64.
std::int64_t binomial(std::int64_t a, std::int64_t b);

/// (q^{n+1} - 1) / (q - 1).
std::int64_t prm_length(std::uint32_t n, std::uint32_t q);

/// Rows are evaluations of reduced_basis_monomials at the standard
/// projective points (the all-ones row for k = 0). The rank is checked
/// against the closed forms for the regime.
LinearCode prm_code(const PrmParams& p);
LinearCode prm_code(const Field& field, std::uint32_t n, std::uint32_t k);

/// Basis monomials labelling the rows of prm_code (empty for k = 0).
std::vector<Monomial> prm_basis_monomials(const PrmParams& p);

/// Affine Reed-Muller code: reduced monomials of degree <= k on F_q^n.
LinearCode arm_code(std::uint32_t n, std::uint32_t k, std::uint32_t q);

/// Dimension by the double alternating sum over t ≡ k (mod q-1).
/// Requires 1 <= k <= n(q-1), else OutOfRange.
std::int64_t dim_sorensen(const PrmParams& p);
/// Dimension by the C(n+k, k) minus correction form. Same range.
std::int64_t dim_mr(const PrmParams& p);
/// (q-s) q^{n-r-1} where k-1 = r(q-1)+s, 0 <= s < q-1. Same range.
std::int64_t min_dist_formula(const PrmParams& p);

struct DualDescription {
  std::uint32_t ell = 0;     // n(q-1) - k
  bool adjoin_ones = false;  // k ≡ 0 (mod q-1)
};

DualDescription dual_description(const PrmParams& p);
/// The code the description names: C_{n,ell} (plus the all-ones row when
/// adjoin_ones). ell = 0 yields span{1}.
LinearCode described_dual(const PrmParams& p);

struct PredictedClass {
  bool self_dual = false;
  bool self_orthogonal = false;
  bool lcd = false;
};

PredictedClass classify_predicted(const PrmParams& p);

struct HullPrediction {
  std::int64_t dim = 0;
  std::string rule;  // which closed-form case produced the value
};

/// First closed-form case that applies, or nullopt where no closed form is
/// known. When several cases apply they are required to agree
/// (InternalInconsistency otherwise). Requires 1 <= k <= n(q-1).
std::optional<HullPrediction> hull_dim_predicted(const PrmParams& p);

/// Monomials whose evaluations form a hull basis, for q > 2k+1 and for
/// (q-1)/2 < k < q-1; nullopt otherwise.
std::optional<std::vector<Monomial>> hull_basis_predicted(const PrmParams& p);

/// Hull dimension over the projective plane for 1 <= k <= 2(q-1):
/// C(k+1, 2) + min(k, q-k-1) when 2k is not ≡ 0 (mod q-1), the full code
/// dimension when it is, with k > q-1 handled through Hull(C) = Hull(C^⊥).
std::int64_t rsj_hull_dim(std::uint32_t k, std::uint32_t q);

/// ev(x_0^k). Requires 1 <= k < n(q-1).
std::vector<elem_t> lcd_witness(const PrmParams& p);

struct MeasuredClass {
  bool self_dual = false;
  bool self_orthogonal = false;
  bool lcd = false;
  std::size_t hull_dim = 0;       // by subspace intersection
  std::size_t gram_rank = 0;      // rank(G G^T)
};

struct ClassificationReport {
  PrmParams params;
  std::int64_t N = 0;
  std::int64_t K = 0;
  std::int64_t D_formula = 0;
  PredictedClass predicted;
  std::optional<HullPrediction> predicted_hull;
  MeasuredClass constructed;
  bool agree = false;
};

/// Builds the code, measures every predicate, compares with the closed forms.
ClassificationReport classify(const PrmParams& p);
ClassificationReport classify(const PrmParams& p, const LinearCode& code, const HullReport& hull);

}  // namespace prmhull
