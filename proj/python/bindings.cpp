#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "simpair/simpair.hpp"

namespace py = pybind11;
using namespace simpair;

namespace {

py::object witness_or_none(const Decision& d) {
  if (!d.witness) return py::none();
  return py::cast(d.witness->map);
}

py::tuple decision(const Decision& d) { return py::make_tuple(d.holds, witness_or_none(d)); }

WitnessMode mode_of(const std::string& s) { return witness_mode_from_string(s); }

}  // namespace

PYBIND11_MODULE(_simpair, m) {
  m.doc() = "Shape invariants and decision procedures for nested pairs of finite equivalence relations.";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  static py::exception<CapExceeded> cap_error(m, "CapExceeded", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CapExceeded& e) {
      py::set_error(cap_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<FinPair>(m, "Pair")
      .def(py::init([](std::size_t n, BlockList e, BlockList f) { return validate_pair(n, std::move(e), std::move(f)); }),
           py::arg("n"), py::arg("E"), py::arg("F"))
      .def_property_readonly("n", &FinPair::size)
      .def_property_readonly("E", [](const FinPair& p) { return p.E().blocks(); })
      .def_property_readonly("F", [](const FinPair& p) { return p.F().blocks(); })
      .def("__eq__", [](const FinPair& a, const FinPair& b) { return a == b; })
      .def("__repr__", [](const FinPair& p) { return "Pair(" + serialize_pair(p) + ")"; });

  m.def("parse_pair", [](const std::string& text) { return parse_pair(text); }, py::arg("text"));
  m.def("serialize_pair", &serialize_pair, py::arg("pair"));
  m.def("restrict", [](const FinPair& p, std::vector<Element> a) { return restrict(p, a); }, py::arg("pair"),
        py::arg("elements"));
  m.def("quotient", &quotient, py::arg("pair"));

  m.def("fs", [](const FinPair& p, char which) { return print_shape_literal(fs_of(which == 'E' ? p.E() : p.F())); },
        py::arg("pair"), py::arg("which") = 'E');
  m.def("cs", [](const FinPair& p, char which) { return print_shape_literal(cs_of(which == 'E' ? p.E() : p.F())); },
        py::arg("pair"), py::arg("which") = 'E');
  m.def("lfs", [](const FinPair& p, std::size_t c) { return print_shape_literal(lfs_of_class(p, c)); });
  m.def("lcs", [](const FinPair& p, std::size_t c) { return print_shape_literal(lcs_of_class(p, c)); });
  m.def("crs", [](const FinPair& p) { return print_shape_literal(crs_of(p)); });
  m.def("gfs", [](const FinPair& p) {
    py::dict out;
    for (const auto& [shape, count] : gfs_of(p)) out[py::str(print_shape_literal(shape))] = count.count();
    return out;
  });

  m.def("shape_leq", [](const std::string& a, const std::string& b) {
    return shape_leq(parse_shape_literal(a), parse_shape_literal(b));
  });
  m.def("sc_member", [](const std::string& s) { return sc_member(parse_shape_literal(s)); });
  m.def("min_size", [](const std::string& s) { return min_size(parse_shape_literal(s)).str(); });
  m.def("canonical_shape", [](const std::string& s) { return print_shape_literal(parse_shape_literal(s)); });
  m.def("gcs_leq", [](const FinPair& a, const FinPair& b) { return gcs_leq(a, b); });

  m.def("decide_reduction", [](const FinPair& a, const FinPair& b) { return decision(decide_reduction(a, b)); },
        "Returns (holds, map or None).");
  m.def("decide_embedding", [](const FinPair& a, const FinPair& b) { return decision(decide_embedding(a, b)); });
  m.def("decide_isomorphism", [](const FinPair& a, const FinPair& b) { return decision(decide_isomorphism(a, b)); });
  m.def(
      "verify_witness",
      [](const FinPair& a, const FinPair& b, std::vector<Element> map, const std::string& mode) {
        auto v = verify_witness(a, b, Witness{mode_of(mode), std::move(map)});
        std::vector<std::string> msgs;
        for (const auto& viol : v.violations) msgs.push_back(viol.str());
        return py::make_tuple(v.ok, msgs);
      },
      py::arg("source"), py::arg("target"), py::arg("map"), py::arg("mode") = "reduction");

  m.def("brute_reduction", [](const FinPair& a, const FinPair& b, std::uint64_t cap) {
    return decision(oracle::brute_reduction(a, b, cap));
  }, py::arg("source"), py::arg("target"), py::arg("cap") = oracle::kDefaultCap);
  m.def("brute_embedding", [](const FinPair& a, const FinPair& b, std::uint64_t cap) {
    return decision(oracle::brute_embedding(a, b, cap));
  }, py::arg("source"), py::arg("target"), py::arg("cap") = oracle::kDefaultCap);
  m.def("brute_isomorphism", [](const FinPair& a, const FinPair& b, std::uint64_t cap) {
    return decision(oracle::brute_isomorphism(a, b, cap));
  }, py::arg("source"), py::arg("target"), py::arg("cap") = oracle::kDefaultIsoCap);
  m.def("enumerate_pairs", [](std::size_t n) { return oracle::enumerate_pairs(n); }, py::arg("n"));

  m.def("build_shape_pair", [](const std::vector<std::string>& shapes) {
    std::vector<LocalFineShape> g;
    for (const auto& s : shapes) g.emplace_back(parse_shape_literal(s));
    return build_shape_pair(g);
  });
  m.def("orbit_pair", [](std::size_t n, const std::vector<std::string>& sub, const std::vector<std::string>& extra) {
    std::vector<Permutation> sub_gens, full_gens;
    for (const auto& s : sub) sub_gens.push_back(parse_cycles(s, n));
    full_gens = sub_gens;
    for (const auto& s : extra) full_gens.push_back(parse_cycles(s, n));
    return orbit_pair(n, sub_gens, full_gens);
  }, py::arg("n"), py::arg("sub_gens"), py::arg("extra_gens") = std::vector<std::string>{});
  m.def("random_pair", [](std::uint64_t seed, std::size_t n, const std::string& profile) {
    if (profile != "uniform" && profile != "shape")
      throw Error(ErrorCode::InvalidArgument, "profile must be 'uniform' or 'shape'");
    return random_pair(seed, n, profile == "shape" ? RandomProfile::ShapeTargeted : RandomProfile::UniformRefinement);
  }, py::arg("seed"), py::arg("n"), py::arg("profile") = "uniform");
}
