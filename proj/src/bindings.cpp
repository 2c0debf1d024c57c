#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spingroup/bispinor.hpp"
#include "spingroup/clifford.hpp"
#include "spingroup/harness.hpp"
#include "spingroup/little_group.hpp"
#include "spingroup/spin_tensor.hpp"
#include "spingroup/sweep.hpp"

namespace py = pybind11;
using namespace spingroup;

namespace {

FactorOrder parse_order(const std::string& order) {
  if (order == "br") return FactorOrder::kBoostThenRotation;
  if (order == "rb") return FactorOrder::kRotationThenBoost;
  throw std::invalid_argument("order must be 'br' or 'rb'");
}

py::dict factorization_dict(const Factorization& f) {
  py::dict d;
  d["boost_factor"] = f.boost_factor;
  d["rotation_factor"] = f.rotation_factor;
  d["order"] = f.order == FactorOrder::kBoostThenRotation ? "br" : "rb";
  d["rotation_angle_2r"] = f.rotation_angle_2r;
  d["u"] = f.boost_param;
  d["beta"] = f.boost_beta;
  d["boost_direction"] = f.boost_direction;
  return d;
}

}  // namespace

PYBIND11_MODULE(spingroup, m) {
  m.doc() =
      "Dirac bispinors, spin tensors and the one-parameter spin group of "
      "Lorentz transformations preserving a fermion's momentum and spin";

  py::class_<FourMomentum>(m, "FourMomentum")
      .def(py::init<double, const Vec3&>(), py::arg("mass"), py::arg("p"))
      .def_property_readonly("mass", &FourMomentum::mass)
      .def_property_readonly("energy", &FourMomentum::energy)
      .def_property_readonly("p", &FourMomentum::momentum)
      .def_property_readonly("half_rapidity", &FourMomentum::half_rapidity);

  py::class_<RestSpinAxis>(m, "RestSpinAxis")
      .def(py::init([](const Vec3& v) { return RestSpinAxis::normalized(v); }),
           py::arg("axis"))
      .def_property_readonly("axis", &RestSpinAxis::axis);

  py::class_<SpinTensor>(m, "SpinTensor")
      .def_readonly("s1", &SpinTensor::s1)
      .def_readonly("s2", &SpinTensor::s2);

  m.def("gamma_matrices", [] {
    const GammaBasis& g = dirac_basis();
    return std::vector<Mat4c>(g.gamma.begin(), g.gamma.end());
  });
  m.def("sigma", [](int a, int b) { return dirac_basis().sigma(a, b); },
        py::arg("a"), py::arg("b"));

  m.def("boost_spin_axis",
        [](const FourMomentum& p, const RestSpinAxis& s) {
          return boost_spin_axis(p, s);
        });
  m.def("spin_operator", [](const SpinTensor& s) {
    return spin_operator(s, dirac_basis());
  });
  m.def("pauli_lubanski", [](const FourMomentum& p, const SpinTensor& s) {
    const FourVector l = pauli_lubanski(p, s);
    return py::make_tuple(l.t, l.x);
  });

  m.def("rest_bispinor", [](const RestSpinAxis& s) {
    return rest_bispinor(s, dirac_basis());
  });
  m.def("boost_bispinor", [](const Vec4c& psi, const FourMomentum& p) {
    return boost_bispinor(psi, p, dirac_basis());
  });
  m.def("extract_phase", [](const Mat4c& w, const Vec4c& psi) {
    const PhaseResult r = extract_phase(w, psi);
    return py::make_tuple(r.phase, r.residual);
  });

  m.def("spin_group_element",
        [](const FourMomentum& p, const RestSpinAxis& s, double phi) {
          return spin_group_element(p, s, phi, dirac_basis()).w;
        },
        py::arg("p"), py::arg("spin"), py::arg("phi"));
  m.def("little_group_element",
        [](const FourMomentum& p, const Vec3& axis, double phi) {
          return element(axis_tensor(p, axis), phi, dirac_basis()).w;
        },
        py::arg("p"), py::arg("axis"), py::arg("phi"));
  m.def("vector_rep",
        [](const Mat4c& s) { return vector_rep(s, dirac_basis()); });

  m.def("factorize",
        [](const FourMomentum& p, const RestSpinAxis& s, double phi,
           const std::string& order) {
          const GammaBasis& g = dirac_basis();
          return factorization_dict(
              factor(spin_group_element(p, s, phi, g), parse_order(order), g));
        },
        py::arg("p"), py::arg("spin"), py::arg("phi"), py::arg("order") = "br");
  m.def("polar_factorize",
        [](const FourMomentum& p, const RestSpinAxis& s, double phi,
           const std::string& order) {
          const GammaBasis& g = dirac_basis();
          return factorization_dict(polar_factor(
              spin_group_element(p, s, phi, g), parse_order(order), g));
        },
        py::arg("p"), py::arg("spin"), py::arg("phi"), py::arg("order") = "br");

  m.def("sweep",
        [](const FourMomentum& p, const RestSpinAxis& s, double phi_max,
           int steps) {
          py::list out;
          for (const SweepRow& r :
               sweep_rows(p, s, phi_max, steps, dirac_basis())) {
            py::dict d;
            d["phi"] = r.phi;
            d["rot2r"] = r.rot2r;
            d["u"] = r.u;
            d["beta"] = r.beta;
            d["bdir"] = r.bdir;
            d["phase"] = r.phase;
            out.append(d);
          }
          return out;
        },
        py::arg("p"), py::arg("spin"), py::arg("phi_max"), py::arg("steps"));

  m.def("run_suite",
        [](std::uint64_t seed, int trials, double tol_strict, double tol_accum,
           double mass, double p_max_over_m) {
          SuiteConfig cfg;
          cfg.seed = seed;
          cfg.trials = trials;
          cfg.tol_strict = tol_strict;
          cfg.tol_accum = tol_accum;
          cfg.mass = mass;
          cfg.p_max_over_m = p_max_over_m;
          const SuiteReport report = run_suite(cfg);
          return py::module_::import("json").attr("loads")(report.to_json());
        },
        py::arg("seed") = 20240901, py::arg("trials") = 100,
        py::arg("tol_strict") = 1e-10, py::arg("tol_accum") = 1e-9,
        py::arg("mass") = 1.0, py::arg("p_max_over_m") = 5.0);
}
