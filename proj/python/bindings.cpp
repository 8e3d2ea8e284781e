#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyface/cli_io.hpp"
#include "polyface/poset_gen.hpp"

namespace py = pybind11;
using namespace polyface;

namespace {

// Sets cross the boundary as sorted lists of ints.
ElementSet to_set(const std::vector<int>& xs) {
  ElementSet s;
  for (int x : xs) {
    if (x < 0 || x >= ElementSet::kMaxElements) throw py::index_error("element out of range");
    s.insert(x);
  }
  return s;
}

Polytope kind_of(const std::string& s) { return polytope_from_string(s); }

py::object as_python(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict fvec(const FVector2& f) {
  py::dict d;
  d["f0"] = f.f0;
  d["f1"] = f.f1;
  d["f2_tri"] = f.f2_tri;
  d["f2_sq"] = f.f2_sq;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "2-face census of order and chain polytopes";

  py::register_exception<PosetError>(m, "PosetError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<oracle::OracleError>(m, "OracleError", PyExc_RuntimeError);

  py::class_<Poset>(m, "Poset")
      .def(py::init<int>(), py::arg("n") = 0)
      .def_static(
          "from_covers", [](int n, const std::vector<Cover>& covers) { return Poset::from_covers(n, covers); },
          py::arg("n"), py::arg("covers"))
      .def_static("from_json", [](const std::string& text) { return parse_poset(text); })
      .def("to_json", [](const Poset& p) { return poset_to_json(p).dump(); })
      .def_property_readonly("n", &Poset::size)
      .def("__len__", &Poset::size)
      .def("covers", &Poset::covers)
      .def("less", [](const Poset& p, int x, int y) {
        if (x < 0 || y < 0 || x >= p.size() || y >= p.size()) throw py::index_error("element out of range");
        return p.less(x, y);
      })
      .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; })
      .def("__repr__", [](const Poset& p) { return "Poset(" + poset_to_json(p).dump() + ")"; });

  m.def("named_poset", &named_poset, py::arg("name"), py::arg("k") = std::nullopt);
  m.def("random_poset", &random_poset, py::arg("n"), py::arg("density"), py::arg("seed"));
  m.def("all_posets", py::overload_cast<int>(&all_posets), py::arg("n"));
  m.def("is_x_free", &is_x_free);
  m.def("to_dot", &to_dot, py::arg("poset"), py::arg("name") = "P");

  m.def(
      "f_vector",
      [](const Poset& p, const std::string& kind) { return fvec(f_vector2(p, kind_of(kind))); },
      py::arg("poset"), py::arg("polytope"));
  m.def(
      "oracle_f_vector",
      [](const Poset& p, const std::string& kind) { return fvec(oracle::run_oracle(p, kind_of(kind)).f); },
      py::arg("poset"), py::arg("polytope"));
  m.def(
      "census",
      [](const Poset& p, const std::string& kind) { return as_python(census_report(p, kind_of(kind))); },
      py::arg("poset"), py::arg("polytope"));
  m.def(
      "oracle",
      [](const Poset& p, const std::string& kind) { return as_python(oracle_report(p, kind_of(kind))); },
      py::arg("poset"), py::arg("polytope"));
  m.def("bijection", [](const Poset& p) { return as_python(bijection_report(p, verify_bijection(p))); });

  m.def(
      "phi", [](const Poset& q, const std::vector<int>& x, const std::vector<int>& y) {
        return phi(q, to_set(x), to_set(y));
      },
      py::arg("q"), py::arg("x") = std::vector<int>{}, py::arg("y") = std::vector<int>{});
  m.def(
      "alpha", [](const Poset& q, const std::vector<int>& x, const std::vector<int>& y) {
        return alpha(q, to_set(x), to_set(y));
      },
      py::arg("q"), py::arg("x") = std::vector<int>{}, py::arg("y") = std::vector<int>{});

  m.def(
      "verify",
      [](int min_n, int max_n, int oracle_max_n, int jobs, std::uint64_t seed) {
        VerifyOptions opt;
        opt.min_n = min_n;
        opt.max_n = max_n;
        opt.oracle_max_n = oracle_max_n;
        opt.jobs = jobs;
        opt.seed = seed;
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = run_verification(opt);
        }
        return as_python(verification_to_json(r));
      },
      py::arg("min_n") = 1, py::arg("max_n") = 5, py::arg("oracle_max_n") = 5, py::arg("jobs") = 1,
      py::arg("seed") = 1);
}
