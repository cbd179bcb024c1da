#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "dnmod/classify.hpp"
#include "dnmod/curvature.hpp"
#include "dnmod/error.hpp"
#include "dnmod/fixtures.hpp"
#include "dnmod/json_io.hpp"
#include "dnmod/pfit.hpp"
#include "dnmod/verify.hpp"
#include "dnmod/weyl.hpp"

namespace py = pybind11;
using namespace dnmod;

// Structured results cross the boundary as JSON text; the Python package decodes them.
namespace {

std::vector<Rat> rats_from(const std::vector<std::string>& xs) {
  std::vector<Rat> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(Rat::parse(x));
  return out;
}

std::vector<std::string> rats_to(const std::vector<Rat>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

std::vector<std::pair<unsigned, unsigned>> pair_list(const std::set<Pair>& s) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (const auto& p : s) out.emplace_back(p.level, p.index);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("normalize", [](const std::string& op) { return parse_operator(op).str(); }, py::arg("op"));
  m.def("adjoint", [](const std::string& op) { return formal_adjoint(parse_operator(op)).str(); },
        py::arg("op"));
  m.def("dn_build", [](const std::string& matrix) { return dn_build(matrix_from_json(Json::parse(matrix))).str(); },
        py::arg("matrix_json"));
  m.def(
      "recover",
      [](unsigned level, unsigned index, std::size_t terms) {
        const Catalog cat = Catalog::load();
        const Recovery r = recover(cat.modular_case({level, index}), terms);
        Json j;
        j["matrix"] = matrix_to_json(r.matrix);
        j["operator"] = r.op.str();
        return j.dump();
      },
      py::arg("level"), py::arg("index"), py::arg("terms") = kDefaultPrecision);
  m.def(
      "verify",
      [](const std::vector<std::pair<unsigned, unsigned>>& pairs, std::size_t terms, unsigned jobs, bool nilpotence) {
        const Catalog cat = Catalog::load();
        std::vector<Pair> ps;
        if (pairs.empty()) {
          ps = cat.pairs();
        } else {
          for (const auto& [n, d] : pairs) ps.push_back({n, d});
        }
        VerifyOptions opts;
        opts.terms = terms;
        opts.jobs = jobs;
        opts.nilpotence = nilpotence;
        std::vector<PairReport> reports;
        {
          py::gil_scoped_release release;
          reports = verify_pairs(cat, ps, opts);
        }
        return report_to_json(reports).dump();
      },
      py::arg("pairs") = std::vector<std::pair<unsigned, unsigned>>{}, py::arg("terms") = kDefaultPrecision,
      py::arg("jobs") = 1, py::arg("nilpotence") = true);
  m.def("necessary_pairs", [](unsigned n_max, unsigned d_max) { return pair_list(necessary_pairs(n_max, d_max)); },
        py::arg("n_max"), py::arg("d_max"));
  m.def("published_pairs", [] { return pair_list(published_pairs()); });
  m.def(
      "phi_t",
      [](unsigned level, unsigned index, std::size_t terms) {
        const Catalog cat = Catalog::load();
        return rats_to(phi_in_t(cat.modular_case({level, index}), terms).coeffs());
      },
      py::arg("level"), py::arg("index"), py::arg("terms") = kDefaultPrecision);
  m.def("fit_d3", [](const std::vector<std::string>& coeffs) { return fit_d3(RatSeries(rats_from(coeffs))).str(); },
        py::arg("coeffs"));
  m.def("reversion", [](const std::vector<std::string>& coeffs) {
    return rats_to(reversion(RatSeries(rats_from(coeffs))).coeffs());
  }, py::arg("coeffs"));
  m.def(
      "nilpotence",
      [](const std::string& op, std::uint64_t lo, std::uint64_t hi) {
        const NilpotenceReport r = nilpotence_report(parse_operator(op), lo, hi);
        std::vector<std::pair<std::uint64_t, std::string>> out;
        for (const auto& [p, s] : r.primes) out.emplace_back(p, std::string(prime_status_name(s)));
        return out;
      },
      py::arg("op"), py::arg("lo") = 5, py::arg("hi") = 43);
}
