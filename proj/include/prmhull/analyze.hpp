#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prmhull/code.hpp"

namespace prmhull {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 33;

/// A_0..A_N, the number of codewords of each Hamming weight.
struct WeightDistribution {
  std::vector<std::uint64_t> counts;

  std::size_t length() const { return counts.empty() ? 0 : counts.size() - 1; }
  std::uint64_t total() const;
  /// Smallest w > 0 with A_w != 0; nullopt for the zero code.
  std::optional<std::size_t> min_distance() const;
  /// sum_w A_w x^{N-w} y^w with ascending y exponent, zero terms omitted,
  /// e.g. "x^4 + 8xy^3".
  std::string polynomial() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Deduplicated supports (sorted coordinate lists), sorted.
struct BlockFamily {
  std::size_t ground_size = 0;
  std::vector<std::vector<std::uint32_t>> blocks;
};

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;  // max messages q^K
  unsigned workers = 1;
  /// Use the two-bitplane path for q = 3, N <= 128 when available.
  bool allow_packed = true;
  /// The space is split further only while every task keeps at least this
  /// many messages.
  std::uint64_t min_task_messages = 1'000'000;
};

struct EnumerationResult {
  WeightDistribution distribution;
  BlockFamily supports;  // weight `collect_weight` only
  bool packed = false;   // which path ran
};

/// Visits all q^K codewords in reflected mixed-radix Gray order, each step
/// adding a multiple of one generator row. Optionally collects supports of
/// the codewords of one weight. The message space is split on its top
/// symbols into independent tasks that `workers` threads share; results are
/// identical for every worker count. Throws BudgetExceeded if q^K > budget.
EnumerationResult enumerate_codewords(const LinearCode& code, std::optional<std::size_t> collect_weight,
                                      const EnumerationOptions& options = {});

WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& options = {});

/// Exhaustive minimum distance. Only codewords whose last nonzero message
/// symbol is 1 are visited, (q^K-1)/(q-1) of them, tracking the minimum
/// alone. Returns 0 for the zero code.
std::size_t min_distance(const LinearCode& code, const EnumerationOptions& options = {});

BlockFamily min_weight_supports(const LinearCode& code, std::size_t weight, const EnumerationOptions& options = {});

/// λ such that every t-subset of the ground set lies in exactly λ blocks;
/// nullopt if the family is empty, block sizes differ, t exceeds the block
/// size, or the counts are not constant.
std::optional<std::uint64_t> design_lambda(const BlockFamily& family, unsigned t);

/// q^K, or nullopt if it exceeds 2^64 - 1.
std::optional<std::uint64_t> message_count(std::uint32_t q, std::size_t k);

}  // namespace prmhull
