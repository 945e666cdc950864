#include "prmhull/report.hpp"

namespace prmhull {

namespace {

Json class_json(bool self_dual, bool self_orthogonal, bool lcd) {
  Json j;
  j["self_dual"] = self_dual;
  j["self_orthogonal"] = self_orthogonal;
  j["lcd"] = lcd;
  return j;
}

}  // namespace

std::string hull_dim_source(const ClassificationReport& r) {
  return r.predicted_hull ? "closed-form" : "constructive";
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["n"] = r.params.n;
  j["k"] = r.params.k;
  j["q"] = r.params.q;
  j["N"] = r.N;
  j["K"] = r.K;
  j["D_formula"] = r.D_formula;
  Json predicted = class_json(r.predicted.self_dual, r.predicted.self_orthogonal, r.predicted.lcd);
  if (r.predicted_hull) {
    predicted["hull_dim"] = r.predicted_hull->dim;
    predicted["hull_rule"] = r.predicted_hull->rule;
  } else {
    predicted["hull_dim"] = "no-closed-form";
  }
  j["predicted"] = predicted;
  Json constructed = class_json(r.constructed.self_dual, r.constructed.self_orthogonal, r.constructed.lcd);
  constructed["hull_dim"] = r.constructed.hull_dim;
  constructed["gram_rank"] = r.constructed.gram_rank;
  j["constructed"] = constructed;
  j["agree"] = r.agree;
  j["hull_dim_source"] = hull_dim_source(r);
  return j;
}

Json to_json(const HullReport& h, const std::optional<std::vector<Monomial>>& basis) {
  Json j;
  j["hull_dim"] = h.hull_dim;
  j["gram_rank"] = h.gram_rank;
  if (basis) {
    Json list = Json::array();
    for (const auto& m : *basis) list.push_back(m.to_string());
    j["basis_monomials"] = list;
  }
  return j;
}

Json to_json(const WeightDistribution& d) {
  Json j = Json::array();
  for (std::size_t w = 0; w < d.counts.size(); ++w) {
    if (d.counts[w] != 0) j.push_back(Json::array({w, d.counts[w]}));
  }
  return j;
}

std::string csv_header() {
  return "n,k,q,N,K,D_formula,pred_self_dual,pred_self_orthogonal,pred_lcd,pred_hull_dim,hull_rule,"
         "self_dual,self_orthogonal,lcd,hull_dim,gram_rank,agree,hull_dim_source";
}

std::string csv_row(const ClassificationReport& r) {
  auto b = [](bool v) { return v ? "1" : "0"; };
  std::string s;
  s += std::to_string(r.params.n) + "," + std::to_string(r.params.k) + "," + std::to_string(r.params.q) + ",";
  s += std::to_string(r.N) + "," + std::to_string(r.K) + "," + std::to_string(r.D_formula) + ",";
  s += std::string(b(r.predicted.self_dual)) + "," + b(r.predicted.self_orthogonal) + "," + b(r.predicted.lcd) + ",";
  if (r.predicted_hull) {
    s += std::to_string(r.predicted_hull->dim) + ",\"" + r.predicted_hull->rule + "\",";
  } else {
    s += "no-closed-form,,";
  }
  s += std::string(b(r.constructed.self_dual)) + "," + b(r.constructed.self_orthogonal) + "," + b(r.constructed.lcd) + ",";
  s += std::to_string(r.constructed.hull_dim) + "," + std::to_string(r.constructed.gram_rank) + ",";
  s += std::string(b(r.agree)) + "," + hull_dim_source(r);
  return s;
}

}  // namespace prmhull
