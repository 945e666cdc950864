#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "prmhull/analyze.hpp"
#include "prmhull/code.hpp"
#include "prmhull/prm.hpp"

namespace prmhull {

using Json = nlohmann::ordered_json;

/// {"n","k","q","N","K","D_formula","predicted","constructed","agree","hull_dim_source"}.
Json to_json(const ClassificationReport& r);
/// {"hull_dim","gram_rank"} plus "basis_monomials" when given.
Json to_json(const HullReport& h, const std::optional<std::vector<Monomial>>& basis = std::nullopt);
/// [[w, A_w], ...] with zero counts omitted.
Json to_json(const WeightDistribution& d);

std::string hull_dim_source(const ClassificationReport& r);

/// Header and row for the sweep CSV.
std::string csv_header();
std::string csv_row(const ClassificationReport& r);

}  // namespace prmhull
