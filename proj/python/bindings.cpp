#include "spectra/serialize.hpp"
#include "spectra/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace spectra;

namespace pybind11::detail {

/// Python int <-> mpz_class through decimal text.
template <> struct type_caster<Integer> {
  PYBIND11_TYPE_CASTER(Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = Integer(std::string(py::str(src)));
    return true;
  }

  static handle cast(const Integer &z, return_value_policy, handle) {
    return PyLong_FromString(z.get_str().c_str(), nullptr, 10);
  }
};

} // namespace pybind11::detail

namespace {

IntMatrix to_matrix(const std::vector<std::vector<Integer>> &rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw SchemaError("matrix rows have different lengths");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<Integer>> from_matrix(const IntMatrix &m) {
  std::vector<std::vector<Integer>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m.row(i);
  return out;
}

Json to_cpp_json(const py::handle &obj) {
  py::object dumps = py::module_::import("json").attr("dumps");
  return parse_json_text(dumps(obj).cast<std::string>(), "argument");
}

py::object to_python(const Json &j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

ChainComplex complex_arg(const py::handle &obj, const std::optional<std::string> &ring) {
  ChainComplex c = complex_from_json(to_cpp_json(obj));
  return ring ? base_change(c, base_ring_from_spec(*ring)) : c;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact homological algebra over Z, its localizations and p-completions";

  // translators are tried latest first, so SchemaError wins over its base
  auto &spectra_error = py::register_exception<SpectraError>(m, "SpectraError", PyExc_ValueError);
  py::register_exception<SchemaError>(m, "SchemaError", spectra_error.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  py::class_<FgAbGroup>(m, "FgAbGroup")
      .def(py::init<std::size_t, IntVector>(), py::arg("rank") = 0, py::arg("torsion") = IntVector{})
      .def_static("cyclic", &FgAbGroup::cyclic)
      .def_static("from_cyclic_orders", &FgAbGroup::from_cyclic_orders)
      .def_property_readonly("rank", &FgAbGroup::rank)
      .def_property_readonly("torsion", &FgAbGroup::torsion)
      .def("order", &FgAbGroup::order)
      .def("exponent", &FgAbGroup::exponent)
      .def("is_trivial", &FgAbGroup::is_trivial)
      .def("is_finite", &FgAbGroup::is_finite)
      .def("to_dict", [](const FgAbGroup &g) { return to_python(to_json(g)); })
      .def("__eq__", [](const FgAbGroup &a, const FgAbGroup &b) { return a == b; })
      .def("__hash__", [](const FgAbGroup &g) { return py::hash(py::str(g.to_string())); })
      .def("__str__", &FgAbGroup::to_string)
      .def("__repr__", [](const FgAbGroup &g) { return "FgAbGroup(" + g.to_string() + ")"; });

  m.def(
      "smith",
      [](const std::vector<std::vector<Integer>> &rows) {
        IntegralSmith s = integral_smith(to_matrix(rows));
        py::dict d;
        d["U"] = from_matrix(s.U);
        d["V"] = from_matrix(s.V);
        d["D"] = from_matrix(s.D);
        IntVector f;
        for (std::size_t i = 0; i < s.rank; ++i) f.push_back(s.D(i, i));
        d["invariant_factors"] = f;
        return d;
      },
      py::arg("matrix"), "Integral Smith form U A V = D with unimodular U, V.");
  m.def(
      "cokernel",
      [](const std::vector<std::vector<Integer>> &rows, const std::string &ring) {
        return cokernel_invariants(to_matrix(rows), base_ring_from_spec(ring));
      },
      py::arg("matrix"), py::arg("ring") = "Z");
  m.def("hom", &hom);
  m.def("ext", &ext);
  m.def("tor", &tor);
  m.def("tensor", [](const FgAbGroup &a, const FgAbGroup &b) { return tensor(a, b); });
  m.def(
      "localize",
      [](const FgAbGroup &a, std::vector<std::uint64_t> primes) {
        return localize_group(a, PrimeSet::finite(std::move(primes)));
      },
      py::arg("group"), py::arg("primes"));
  m.def(
      "completion",
      [](const py::object &group, std::uint64_t p) {
        CatalogueGroup g = catalogue_from_json(to_cpp_json(group));
        py::dict d;
        d["L0"] = to_python(to_json(l0(g, p)));
        d["L1"] = to_python(to_json(l1(g, p)));
        return d;
      },
      py::arg("group"), py::arg("p"), "L0 and L1 of a catalogue group given as {\"atoms\": [...]}.");

  m.def(
      "homology",
      [](const py::object &c, std::optional<std::string> ring) { return homology(complex_arg(c, ring)); },
      py::arg("complex"), py::arg("ring") = py::none(), "Nonzero homology groups by degree.");
  m.def(
      "mod_p_homology", [](const py::object &c, std::uint64_t p) { return mod_p_homology(complex_arg(c, {}), p); },
      py::arg("complex"), py::arg("p"));
  m.def(
      "completed_homology",
      [](const py::object &c, std::uint64_t p) {
        py::dict d;
        for (const auto &[n, mod] : completed_homology(complex_arg(c, {}), p)) d[py::int_(n)] = to_python(to_json(mod));
        return d;
      },
      py::arg("complex"), py::arg("p"));
  m.def(
      "cw_structure", [](const py::object &c) { return to_python(to_json(cw_structure(complex_arg(c, {})))); },
      py::arg("complex"));
  m.def(
      "finiteness_report",
      [](const py::object &c, const std::vector<std::uint64_t> &primes) {
        return to_python(to_json(finiteness_report(complex_arg(c, {}), primes)));
      },
      py::arg("complex"), py::arg("primes"));
  m.def(
      "p_finite_model",
      [](const py::object &c, std::uint64_t p) { return to_python(to_json(p_finite_model(complex_arg(c, {}), p))); },
      py::arg("complex"), py::arg("p"));
  m.def(
      "moore_complex", [](const FgAbGroup &a) { return to_python(to_json(moore_complex(a))); }, py::arg("group"));
  m.def(
      "dp_quotient",
      [](std::vector<std::uint64_t> primes, std::size_t n) {
        QuotientReport r = dp_quotient(PrimeSet::finite(primes), n);
        Json j = {{"Q", primes}, {"N", n}, {"cokernel", to_json(r.cokernel)}, {"phi_image", to_string(r.generator_image)}};
        return to_python(j);
      },
      py::arg("primes"), py::arg("n"));
  m.def(
      "verify",
      [](const std::string &suite, std::uint64_t seed, std::optional<std::size_t> cases) {
        verify::Options opts{seed, cases};
        std::vector<verify::CheckReport> reports;
        {
          py::gil_scoped_release release;
          reports = verify::run(suite, opts);
        }
        return to_python(verify::to_json(reports, opts, suite));
      },
      py::arg("suite") = "all", py::arg("seed") = 42, py::arg("cases") = py::none());
}
