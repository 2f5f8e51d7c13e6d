// Python module exposing the main operations: array construction and rank
// tests, tableau enumeration and Schur evaluation, the minimal-vanishing-sum
// catalog, ambiguity enumeration (reports as JSON text), and symmetric-array
// analysis. Exact rationals cross the boundary as strings ("p/q").

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "ambig/array_core.hpp"
#include "ambig/enumeration.hpp"
#include "ambig/rational.hpp"
#include "ambig/symmetric.hpp"
#include "ambig/tableaux.hpp"
#include "ambig/vansums.hpp"

namespace py = pybind11;
using namespace ambig;

namespace {

std::vector<Rat> rats_of(const std::vector<std::string>& texts) {
  std::vector<Rat> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_rat(t));
  return out;
}

std::vector<std::string> strs_of(const std::vector<Rat>& rats) {
  std::vector<std::string> out;
  out.reserve(rats.size());
  for (const auto& r : rats) out.push_back(rat_str(r));
  return out;
}

enumeration::Budget budget_of(std::uint64_t max_nodes, double max_seconds) {
  return enumeration::Budget{max_nodes, max_seconds};
}

enumeration::Options options_of(bool prune, bool root_orbit_prune, int jobs) {
  enumeration::Options o;
  o.prune = prune;
  o.root_orbit_prune = root_orbit_prune;
  o.jobs = jobs;
  return o;
}

}  // namespace

PYBIND11_MODULE(_ambig, m) {
  m.doc() = "Integer linear array ambiguity toolkit";

  py::register_exception<enumeration::VerificationError>(m, "VerificationError");

  py::class_<core::LinearArray>(m, "LinearArray")
      .def_readonly("positions", &core::LinearArray::positions)
      .def_property_readonly(
          "baseline", [](const core::LinearArray& a) { return rat_str(a.baseline); })
      .def("__repr__", [](const core::LinearArray& a) {
        std::string s = "LinearArray([";
        for (size_t i = 0; i < a.positions.size(); ++i) {
          if (i) s += ", ";
          s += std::to_string(a.positions[i]);
        }
        return s + "], baseline=" + rat_str(a.baseline) + ")";
      });

  m.def(
      "make_array",
      [](std::vector<long> positions, const std::string& baseline) {
        return core::make_array(std::move(positions), parse_rat(baseline));
      },
      py::arg("positions"), py::arg("baseline") = "1");

  py::class_<core::AmbiguityVerdict>(m, "AmbiguityVerdict")
      .def_property_readonly("status",
                             [](const core::AmbiguityVerdict& v) {
                               return v.status == core::CheckStatus::kOk
                                          ? "ok"
                                          : "trivial-repeat";
                             })
      .def_readonly("ambiguous", &core::AmbiguityVerdict::ambiguous)
      .def_readonly("smallest_sv", &core::AmbiguityVerdict::smallest_sv)
      .def_readonly("largest_sv", &core::AmbiguityVerdict::largest_sv)
      .def_readonly("rank", &core::AmbiguityVerdict::rank);

  m.def("default_tol", &core::default_tol);
  m.def("is_ambiguous", &core::is_ambiguous, py::arg("array"), py::arg("phis"),
        py::arg("tol") = core::default_tol());
  m.def(
      "electrical_angle",
      [](double theta, const std::string& baseline) {
        return core::electrical_angle(theta, parse_rat(baseline));
      },
      py::arg("theta"), py::arg("baseline") = "1");
  m.def(
      "doa_of",
      [](double phi, const std::string& baseline) {
        return core::doa_of(phi, parse_rat(baseline));
      },
      py::arg("phi"), py::arg("baseline") = "1");
  m.def("steering_matrix", &core::steering_matrix, py::arg("array"), py::arg("phis"));
  m.def("generalized_vandermonde_det", &core::generalized_vandermonde_det,
        py::arg("exponents"), py::arg("z"));
  m.def("classical_vandermonde_det", &core::classical_vandermonde_det, py::arg("z"));

  // Tableaux and Schur evaluation.
  m.def("shape_of", &tableaux::shape_of, py::arg("positions"));
  m.def("ssyt_count", &tableaux::ssyt_count, py::arg("shape"), py::arg("entries"));
  m.def(
      "enumerate_ssyt",
      [](const tableaux::Shape& shape, int M) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& t : tableaux::enumerate_ssyt(shape, M)) out.push_back(t.rows);
        return out;
      },
      py::arg("shape"), py::arg("entries"));
  m.def("weight_matrix", &tableaux::weight_matrix, py::arg("shape"), py::arg("entries"));
  m.def("schur_eval", &tableaux::schur_eval, py::arg("weights"), py::arg("z"));

  // Minimal vanishing sums.
  m.def("restricted_partitions", &vansums::restricted_partitions, py::arg("n"));
  m.def("mann_bound", &vansums::mann_bound, py::arg("partition"));
  m.def(
      "is_vanishing",
      [](const std::vector<std::string>& phases) {
        return vansums::is_vanishing(rats_of(phases));
      },
      py::arg("phases"));
  m.def(
      "is_minimal",
      [](const std::vector<std::string>& phases) {
        return vansums::is_minimal(rats_of(phases));
      },
      py::arg("phases"));
  m.def(
      "catalog_of_length",
      [](int length) {
        std::vector<std::vector<std::string>> out;
        for (const auto& s : vansums::Catalog::instance().of_length(length))
          out.push_back(strs_of(s.phases));
        return out;
      },
      py::arg("length"));

  // Enumeration. Reports cross as canonical JSON text; the package wrapper
  // parses them into dictionaries.
  m.def(
      "enumerate_all_json",
      [](const core::LinearArray& array, std::uint64_t max_nodes,
         double max_seconds, bool prune, bool root_orbit_prune, int jobs) {
        const auto rep = enumeration::enumerate_all(
            array, budget_of(max_nodes, max_seconds),
            options_of(prune, root_orbit_prune, jobs));
        return enumeration::report_json(rep);
      },
      py::arg("array"), py::arg("max_nodes") = 0, py::arg("max_seconds") = 0.0,
      py::arg("prune") = true, py::arg("root_orbit_prune") = false,
      py::arg("jobs") = 1);
  m.def(
      "uniform_ambiguities",
      [](const core::LinearArray& array) {
        std::vector<std::vector<std::string>> out;
        for (const auto& v : enumeration::uniform_ambiguities(array))
          out.push_back(strs_of(v));
        return out;
      },
      py::arg("array"));
  m.def(
      "uniform_coverage",
      [](const core::LinearArray& array) {
        const auto rep = enumeration::enumerate_all(array);
        return enumeration::check_uniform_coverage(array, rep);
      },
      py::arg("array"));

  // Symmetric arrays.
  py::class_<symmetric::SymmetricArray>(m, "SymmetricArray")
      .def_property_readonly(
          "positions",
          [](const symmetric::SymmetricArray& s) { return strs_of(s.positions); })
      .def_property_readonly(
          "shift", [](const symmetric::SymmetricArray& s) { return rat_str(s.shift); })
      .def_property_readonly(
          "baseline",
          [](const symmetric::SymmetricArray& s) { return rat_str(s.baseline); })
      .def_readonly("norm", &symmetric::SymmetricArray::norm)
      .def_readonly("manifold_length", &symmetric::SymmetricArray::manifold_length);

  py::class_<symmetric::CharacteristicPoint>(m, "CharacteristicPoint")
      .def_readonly("s", &symmetric::CharacteristicPoint::s)
      .def_readonly("order", &symmetric::CharacteristicPoint::order)
      .def_readonly("theta", &symmetric::CharacteristicPoint::theta);

  m.def("detect_symmetry", &symmetric::detect_symmetry, py::arg("array"));
  m.def("arc_length", &symmetric::arc_length, py::arg("theta"), py::arg("norm"));
  m.def("theta_of", &symmetric::theta_of, py::arg("s"), py::arg("norm"));
  m.def("characteristic_condition", &symmetric::characteristic_condition,
        py::arg("array"), py::arg("order"), py::arg("s"));
  m.def("characteristic_points", &symmetric::characteristic_points, py::arg("array"),
        py::arg("order"), py::arg("resolution") = 10000);
  m.def("reduced_array", &symmetric::reduced_array, py::arg("array"));
  m.def("real_part_steering", &symmetric::real_part_steering, py::arg("reduced"),
        py::arg("thetas"));
  m.def("real_part_ambiguity_equivalence", &symmetric::real_part_ambiguity_equivalence,
        py::arg("array"), py::arg("thetas"), py::arg("tol") = core::default_tol());
  m.def("symmetric_ambiguity_family", &symmetric::symmetric_ambiguity_family,
        py::arg("array"), py::arg("v1_grid"));
}
