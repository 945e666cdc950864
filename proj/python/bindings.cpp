#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "prmhull/analyze.hpp"
#include "prmhull/cli.hpp"
#include "prmhull/prm.hpp"
#include "prmhull/report.hpp"

namespace py = pybind11;
using namespace prmhull;

namespace {

EnumerationOptions options(std::uint64_t budget, unsigned workers) {
  EnumerationOptions o;
  o.budget = budget;
  o.workers = std::max(1u, workers);
  return o;
}

PrmParams params(std::uint32_t n, std::uint32_t k, std::uint32_t q) { return PrmParams{n, k, q}; }

std::vector<std::vector<elem_t>> rows(const Matrix& m) {
  std::vector<std::vector<elem_t>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
  return out;
}

}  // namespace

PYBIND11_MODULE(_prmhull, m) {
  m.doc() = "Projective Reed-Muller codes: parameters, duals, hulls and weight enumerators";

  auto error = py::register_exception<Error>(m, "PrmhullError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());

  py::class_<Field>(m, "Field")
      .def(py::init(&Field::make), py::arg("q"))
      .def_property_readonly("q", &Field::q)
      .def_property_readonly("p", &Field::p)
      .def_property_readonly("e", &Field::e)
      .def_property_readonly("modulus", &Field::modulus)
      .def("add", &Field::add)
      .def("sub", &Field::sub)
      .def("neg", &Field::neg)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv)
      .def("div", &Field::div)
      .def("pow", &Field::pow)
      .def("power_sum", [](const Field& f, std::uint64_t r) { return power_sum(f, r).index(); })
      .def("__repr__", [](const Field& f) { return "Field(" + std::to_string(f.q()) + ")"; });

  m.def("prm_length", &prm_length, py::arg("n"), py::arg("q"));
  m.def("dim_sorensen", [](std::uint32_t n, std::uint32_t k, std::uint32_t q) { return dim_sorensen(params(n, k, q)); },
        py::arg("n"), py::arg("k"), py::arg("q"));
  m.def("dim_mr", [](std::uint32_t n, std::uint32_t k, std::uint32_t q) { return dim_mr(params(n, k, q)); },
        py::arg("n"), py::arg("k"), py::arg("q"));
  m.def("min_dist_formula",
        [](std::uint32_t n, std::uint32_t k, std::uint32_t q) { return min_dist_formula(params(n, k, q)); },
        py::arg("n"), py::arg("k"), py::arg("q"));
  m.def("generator", [](std::uint32_t n, std::uint32_t k, std::uint32_t q) { return rows(prm_code(params(n, k, q)).generator()); },
        py::arg("n"), py::arg("k"), py::arg("q"), "Canonical generator matrix as a list of rows.");

  m.def("hull_dim_predicted",
        [](std::uint32_t n, std::uint32_t k, std::uint32_t q) -> std::optional<std::pair<std::int64_t, std::string>> {
          const auto h = hull_dim_predicted(params(n, k, q));
          if (!h) return std::nullopt;
          return std::make_pair(h->dim, h->rule);
        },
        py::arg("n"), py::arg("k"), py::arg("q"), "(dimension, rule) or None when no closed form applies.");
  m.def("hull_dim", [](std::uint32_t n, std::uint32_t k, std::uint32_t q) { return hull(prm_code(params(n, k, q))).hull_dim; },
        py::arg("n"), py::arg("k"), py::arg("q"));
  m.def("_classify_json",
        [](std::uint32_t n, std::uint32_t k, std::uint32_t q) { return to_json(classify(params(n, k, q))).dump(); },
        py::arg("n"), py::arg("k"), py::arg("q"));

  m.def("weight_distribution",
        [](std::uint32_t n, std::uint32_t k, std::uint32_t q, std::uint64_t budget, unsigned workers) {
          const LinearCode code = prm_code(params(n, k, q));
          py::gil_scoped_release release;
          return weight_distribution(code, options(budget, workers)).counts;
        },
        py::arg("n"), py::arg("k"), py::arg("q"), py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);
  m.def("min_distance",
        [](std::uint32_t n, std::uint32_t k, std::uint32_t q, std::uint64_t budget, unsigned workers) {
          const LinearCode code = prm_code(params(n, k, q));
          py::gil_scoped_release release;
          return min_distance(code, options(budget, workers));
        },
        py::arg("n"), py::arg("k"), py::arg("q"), py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);
  m.def("design_lambda",
        [](std::uint32_t n, std::uint32_t k, std::uint32_t q, std::size_t w, unsigned t, std::uint64_t budget,
           unsigned workers) {
          const LinearCode code = prm_code(params(n, k, q));
          py::gil_scoped_release release;
          const BlockFamily b = min_weight_supports(code, w, options(budget, workers));
          return std::make_pair(b.blocks.size(), b.blocks.empty() ? std::nullopt : design_lambda(b, t));
        },
        py::arg("n"), py::arg("k"), py::arg("q"), py::arg("w"), py::arg("t") = 2, py::arg("budget") = kDefaultBudget,
        py::arg("workers") = 1, "(number of blocks, lambda or None) for the weight-w supports.");

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::vector<std::string> argv{"prmhull"};
          argv.insert(argv.end(), args.begin(), args.end());
          std::ostringstream out, err;
          int code;
          {
            py::gil_scoped_release release;
            code = run_cli(argv, out, err);
          }
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line tool; returns (exit code, stdout, stderr).");
}
