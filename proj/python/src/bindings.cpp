#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "peakon/error.hpp"
#include "peakon/flow.hpp"
#include "peakon/inverse.hpp"
#include "peakon/io.hpp"
#include "peakon/measure.hpp"
#include "peakon/report.hpp"
#include "peakon/spectrum.hpp"

namespace py = pybind11;
using namespace peakon;

namespace {

DiscreteMeasure to_measure(const std::vector<std::pair<double, double>>& atoms) {
  std::vector<Atom> a;
  a.reserve(atoms.size());
  for (const auto& [x, w] : atoms) a.push_back({x, w});
  return DiscreteMeasure(std::move(a));
}

std::vector<std::pair<double, double>> atom_list(const DiscreteMeasure& omega) {
  std::vector<std::pair<double, double>> out;
  for (const auto& a : omega.atoms()) out.emplace_back(a.x, a.w);
  return out;
}

SpectralData to_spectral(Side side, const std::vector<std::pair<double, double>>& entries) {
  std::vector<SpectralEntry> e;
  for (const auto& [l, g] : entries) e.push_back({l, g});
  return SpectralData(side, std::move(e));
}

std::vector<std::pair<double, double>> entry_list(const SpectralData& d) {
  std::vector<std::pair<double, double>> out;
  for (const auto& e : d.entries()) out.emplace_back(e.lambda, e.gamma2);
  return out;
}

InverseMethod to_method(const std::string& s) {
  if (s == "moments") return InverseMethod::moments;
  if (s == "continued_fraction") return InverseMethod::continued_fraction;
  throw py::value_error("method must be 'moments' or 'continued_fraction'");
}

}  // namespace

PYBIND11_MODULE(_peakon, m) {
  m.doc() = "Spectral theory of multi-peakon measures and the Camassa-Holm flow";

  static py::exception<Error> error(m, "PeakonError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      // args = (kind, message)
      PyErr_SetObject(error.ptr(), py::make_tuple(to_string(e.kind()), e.what()).ptr());
    }
  });

  py::enum_<Side>(m, "Side").value("left", Side::left).value("right", Side::right);

  py::class_<DiscreteMeasure>(m, "Measure")
      .def(py::init([](const std::vector<std::pair<double, double>>& atoms) { return to_measure(atoms); }),
           py::arg("atoms") = std::vector<std::pair<double, double>>{})
      .def_property_readonly("atoms", &atom_list)
      .def("__len__", &DiscreteMeasure::size)
      .def("reflected", &DiscreteMeasure::reflected)
      .def("negated", &DiscreteMeasure::negated)
      .def("is_positive", &DiscreteMeasure::is_positive)
      .def("is_negative", &DiscreteMeasure::is_negative)
      .def("to_json", &format_measure)
      .def_static("from_json", &parse_measure)
      .def("__eq__", [](const DiscreteMeasure& a, const DiscreteMeasure& b) { return a == b; })
      .def("__repr__", [](const DiscreteMeasure& a) { return "Measure(" + py::repr(py::cast(atom_list(a))).cast<std::string>() + ")"; });

  py::class_<SpectralData>(m, "SpectralData")
      .def(py::init(&to_spectral), py::arg("side"), py::arg("entries"))
      .def_property_readonly("side", &SpectralData::side)
      .def_property_readonly("entries", &entry_list)
      .def("eigenvalues", &SpectralData::eigenvalues)
      .def("restricted", &SpectralData::restricted, py::arg("cutoff"))
      .def("__len__", &SpectralData::size)
      .def("to_json", &format_spectral)
      .def_static("from_json", &parse_spectral);

  m.def("u", &u_eval, py::arg("omega"), py::arg("x"));
  m.def("kernel_integral", &kernel_integral, py::arg("omega"), py::arg("x"));
  m.def("wronskian", py::overload_cast<const DiscreteMeasure&, double>(&wronskian), py::arg("omega"), py::arg("z"));
  m.def("eigenvalues", &eigenvalues, py::arg("omega"));
  m.def("norming_constant", &norming_constant, py::arg("omega"), py::arg("lam"), py::arg("side") = Side::right);
  m.def("energy", &energy, py::arg("omega"), py::arg("lam"), py::arg("side") = Side::right);
  m.def(
      "coupling",
      [](const DiscreteMeasure& omega, double lambda) {
        const auto c = coupling(omega, lambda);
        return std::make_pair(c.c_plus, c.c_minus);
      },
      py::arg("omega"), py::arg("lam"));
  m.def("spectral_data", &spectral_data, py::arg("omega"), py::arg("side") = Side::right);
  m.def(
      "trace_report",
      [](const DiscreteMeasure& omega) {
        const auto t = trace_report(omega);
        py::dict d;
        d["sum_inverse"] = t.sum_inverse;
        d["sum_abs_inverse"] = t.sum_abs_inverse;
        d["signed_mass"] = t.signed_mass;
        d["total_variation"] = t.total_variation;
        return d;
      },
      py::arg("omega"));
  m.def("u_three_spectra", &u_three_spectra, py::arg("omega"), py::arg("x"));

  m.def(
      "reconstruct",
      [](const SpectralData& d, const std::string& method) { return reconstruct(d, to_method(method)); },
      py::arg("data"), py::arg("method") = "moments");
  m.def(
      "solve_ch", [](const DiscreteMeasure& omega, double t) { return solve_ch(omega, t); }, py::arg("omega0"),
      py::arg("t"));
  m.def(
      "evolve",
      [](const SpectralData& d, double t) {
        const FlowState s(d);
        return evolve(s, t, d.side());
      },
      py::arg("data"), py::arg("t"));
  m.def(
      "phase_shifts",
      [](const DiscreteMeasure& omega) {
        std::vector<std::pair<double, double>> out;
        for (const auto& p : phase_shifts(make_flow_state(omega))) out.emplace_back(p.lambda, p.eta);
        return out;
      },
      py::arg("omega"));
  m.def(
      "asymptotic_profile",
      [](const std::vector<std::pair<double, double>>& shifts, double x, double t) {
        std::vector<PhaseShift> p;
        for (const auto& [l, eta] : shifts) p.push_back({l, eta, eta});
        return asymptotic_profile(p, x, t);
      },
      py::arg("shifts"), py::arg("x"), py::arg("t"));
  m.def(
      "multipeakon_approx", [](const SpectralData& d, double cutoff) { return multipeakon_approx(d, cutoff); },
      py::arg("data"), py::arg("cutoff"));
  m.def("lipschitz_metric", &lipschitz_metric, py::arg("d1"), py::arg("d2"), py::arg("sigma"));

  m.def(
      "verify",
      [](const DiscreteMeasure& omega) {
        const auto r = verify(omega);
        py::dict out;
        for (const auto& x : r.residuals) {
          py::dict e;
          e["value"] = x.value;
          e["tolerance"] = x.tolerance;
          e["pass"] = x.pass;
          out[py::str(x.name)] = e;
        }
        return py::make_tuple(r.pass(), out);
      },
      py::arg("omega"));
}
