#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sphthc/cubic.hpp"
#include "sphthc/harmonics.hpp"
#include "sphthc/params.hpp"
#include "sphthc/reduced.hpp"
#include "sphthc/spectrum.hpp"
#include "sphthc/transition.hpp"

namespace py = pybind11;
using namespace sphthc;

PYBIND11_MODULE(sphthc, m) {
  m.doc() = "Linear stability and first-transition analysis of "
            "double-diffusive convection in a spherical shell";

  py::register_exception<Error>(m, "Error");

  py::class_<Params>(m, "Params")
      .def_static("make", &Params::make, py::arg("Pr"), py::arg("Le"),
                  py::arg("R"), py::arg("Rtilde"), py::arg("r"),
                  py::arg("s_sign") = 1)
      .def_static("at_criticality", &Params::at_criticality, py::arg("Pr"),
                  py::arg("Le"), py::arg("R"), py::arg("r"))
      .def_static("with_sigma", &Params::with_sigma, py::arg("Pr"),
                  py::arg("Le"), py::arg("R"), py::arg("r"), py::arg("sigma"))
      .def_readonly("Pr", &Params::Pr)
      .def_readonly("Le", &Params::Le)
      .def_readonly("R", &Params::R)
      .def_readonly("Rtilde", &Params::Rtilde)
      .def_readonly("r", &Params::r)
      .def_readonly("s_sign", &Params::s_sign)
      .def("rtilde_signed", &Params::rtilde_signed)
      .def("sigma", &Params::sigma);

  py::enum_<Regime>(m, "Regime")
      .value("SteadyMultiEquilibria", Regime::SteadyMultiEquilibria)
      .value("Oscillatory", Regime::Oscillatory)
      .value("Degenerate", Regime::Degenerate);

  py::class_<RegimeReport>(m, "RegimeReport")
      .def_readonly("sigma", &RegimeReport::sigma)
      .def_readonly("sigma_c", &RegimeReport::sigma_c)
      .def_readonly("K", &RegimeReport::K)
      .def_readonly("R0", &RegimeReport::R0)
      .def_readonly("R1", &RegimeReport::R1)
      .def_readonly("eta", &RegimeReport::eta)
      .def_readonly("eta_c", &RegimeReport::eta_c)
      .def_readonly("regime", &RegimeReport::regime)
      .def_readonly("l_c", &RegimeReport::l_c);

  m.def("wavenumber_sq", &wavenumber_sq, py::arg("l"), py::arg("r"));
  m.def("threshold_radius", &threshold_radius, py::arg("l"));
  m.def("critical_degree", &critical_degree, py::arg("r"));
  m.def(
      "sigma_crit",
      [](double r) {
        const SigmaCrit s = sigma_crit(r);
        return py::make_tuple(s.sigma_c, s.l_c);
      },
      py::arg("r"));
  m.def("regime", &regime, py::arg("params"));

  m.def("solve_cubic", &solve_cubic, py::arg("b2"), py::arg("b1"),
        py::arg("b0"));

  py::class_<SpectrumTriple>(m, "SpectrumTriple")
      .def_readonly("betas", &SpectrumTriple::betas)
      .def_readonly("b0", &SpectrumTriple::b0)
      .def_readonly("b1", &SpectrumTriple::b1)
      .def_readonly("b2", &SpectrumTriple::b2);

  m.def(
      "dispersion_coefficients",
      [](int l, int n, const Params& p) {
        const DispersionCoefficients d = dispersion_coefficients(l, n, p);
        return py::make_tuple(d.b0, d.b1, d.b2);
      },
      py::arg("l"), py::arg("n"), py::arg("params"));
  m.def("eigenvalues", &eigenvalues, py::arg("l"), py::arg("n"),
        py::arg("params"));
  m.def("eigenvalue_shear", &eigenvalue_shear, py::arg("l"), py::arg("params"));
  m.def(
      "eigenvalues_horizontal_mean",
      [](int n, const Params& p) {
        const HorizontalMeanPair h = eigenvalues_horizontal_mean(n, p);
        return py::make_tuple(h.beta_thermal, h.beta_saline);
      },
      py::arg("n"), py::arg("params"));

  py::class_<ModeCoefficients>(m, "ModeCoefficients")
      .def_readonly("theta", &ModeCoefficients::theta)
      .def_readonly("phi", &ModeCoefficients::phi)
      .def_readonly("u_scale", &ModeCoefficients::u_scale)
      .def_readonly("w_scale", &ModeCoefficients::w_scale)
      .def_readonly("adjoint", &ModeCoefficients::adjoint);

  m.def(
      "mode_coefficients",
      [](int l, int m, int n, int k, std::complex<double> beta,
         const Params& p, bool adjoint) {
        return mode_coefficients(ModeIndex{l, m, n, k}, beta, p, adjoint);
      },
      py::arg("l"), py::arg("m"), py::arg("n"), py::arg("k"), py::arg("beta"),
      py::arg("params"), py::arg("adjoint") = false);

  py::class_<PesReport>(m, "PesReport")
      .def_readonly("sigma", &PesReport::sigma)
      .def_readonly("sigma_c", &PesReport::sigma_c)
      .def_readonly("l_c", &PesReport::l_c)
      .def_readonly("beta_crit", &PesReport::beta_crit)
      .def_readonly("max_noncritical_re", &PesReport::max_noncritical_re)
      .def_readonly("pattern_ok", &PesReport::pattern_ok);

  m.def("verify_pes", &verify_pes, py::arg("params"), py::arg("l_max") = 50,
        py::arg("n_max") = 50);

  py::enum_<TransitionType>(m, "TransitionType")
      .value("TypeI", TransitionType::TypeI)
      .value("TypeII", TransitionType::TypeII)
      .value("Marginal", TransitionType::Marginal);

  py::class_<DTerm>(m, "DTerm")
      .def_readonly("l", &DTerm::l)
      .def_readonly("n", &DTerm::n)
      .def_readonly("value", &DTerm::value);

  py::class_<CenterManifoldCoeffs>(m, "CenterManifoldCoeffs")
      .def_readonly("l_c", &CenterManifoldCoeffs::l_c)
      .def_readonly("A02", &CenterManifoldCoeffs::A02)
      .def_readonly("A22", &CenterManifoldCoeffs::A22)
      .def_readonly("B22", &CenterManifoldCoeffs::B22)
      .def_readonly("B42", &CenterManifoldCoeffs::B42);

  py::class_<TransitionReport>(m, "TransitionReport")
      .def_readonly("l_c", &TransitionReport::l_c)
      .def_readonly("q", &TransitionReport::q)
      .def_readonly("d_terms", &TransitionReport::d_terms)
      .def_readonly("classification", &TransitionReport::classification)
      .def_readonly("attractor_radius_sq",
                    &TransitionReport::attractor_radius_sq)
      .def_readonly("cm", &TransitionReport::cm)
      .def_readonly("near_pole", &TransitionReport::near_pole);

  m.def("d_zero_mode", &d_zero_mode, py::arg("l_c"), py::arg("params"));
  m.def("d_higher", &d_higher, py::arg("l_c"), py::arg("l"), py::arg("params"));
  m.def("transition_number", &transition_number, py::arg("l_c"),
        py::arg("params"));
  m.def("critical_R_star", &critical_R_star, py::arg("l_c"), py::arg("Le"),
        py::arg("Pr"), py::arg("r"));
  m.def("center_manifold_coeffs", &center_manifold_coeffs, py::arg("l_c"),
        py::arg("params"));

  m.def(
      "ylm",
      [](int l, int m, double theta, double phi) { return ylm(l, m, theta, phi); },
      py::arg("l"), py::arg("m"), py::arg("theta"), py::arg("phi"));
  m.def(
      "triple_product_quadrature",
      [](int l1, int m1, int l2, int m2, int l3, int m3) {
        return triple_product_quadrature({l1, m1}, {l2, m2}, {l3, m3});
      },
      py::arg("l1"), py::arg("m1"), py::arg("l2"), py::arg("m2"),
      py::arg("l3"), py::arg("m3"));
  m.def(
      "gaunt_closed_form",
      [](int l1, int m1, int l2, int m2, int l3, int m3) {
        return gaunt_closed_form({l1, m1}, {l2, m2}, {l3, m3});
      },
      py::arg("l1"), py::arg("m1"), py::arg("l2"), py::arg("m2"),
      py::arg("l3"), py::arg("m3"));
  m.def("wigner_3j", &wigner_3j, py::arg("l1"), py::arg("l2"), py::arg("l3"),
        py::arg("m1"), py::arg("m2"), py::arg("m3"));
  m.def("interaction_support", &interaction_support, py::arg("l_c"));

  py::class_<AmplitudeState>(m, "AmplitudeState")
      .def_static("zero", &AmplitudeState::zero, py::arg("l_c"))
      .def_readonly("l_c", &AmplitudeState::l_c)
      .def_readonly("t", &AmplitudeState::t)
      .def_readwrite("x", &AmplitudeState::x)
      .def("set", [](AmplitudeState& s, int m,
                     std::complex<double> v) { s.at(m) = v; },
           py::arg("m"), py::arg("value"))
      .def("get", [](const AmplitudeState& s, int m) { return s.at(m); },
           py::arg("m"))
      .def("norm_sq", &AmplitudeState::norm_sq)
      .def("reality_residue", &AmplitudeState::reality_residue)
      .def("project_reality", &AmplitudeState::project_reality);

  m.def("reduced_rhs", &reduced_rhs, py::arg("state"), py::arg("beta"),
        py::arg("q"));

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("samples", &Trajectory::samples)
      .def_readonly("diverged", &Trajectory::diverged);

  m.def("integrate", &integrate, py::arg("state0"), py::arg("beta"),
        py::arg("q"), py::arg("dt"), py::arg("horizon"), py::arg("stride") = 1);

  py::class_<AttractorCheckReport>(m, "AttractorCheckReport")
      .def_readonly("sigma", &AttractorCheckReport::sigma)
      .def_readonly("beta_crit", &AttractorCheckReport::beta_crit)
      .def_readonly("q", &AttractorCheckReport::q)
      .def_readonly("expected_radius_sq",
                    &AttractorCheckReport::expected_radius_sq)
      .def_readonly("terminal_radius_sq",
                    &AttractorCheckReport::terminal_radius_sq)
      .def_readonly("max_rel_radius_dev",
                    &AttractorCheckReport::max_rel_radius_dev)
      .def_readonly("min_direction_spread",
                    &AttractorCheckReport::min_direction_spread)
      .def_readonly("ok", &AttractorCheckReport::ok);

  m.def("attractor_check", &attractor_check, py::arg("l_c"), py::arg("params"),
        py::arg("sigma_offset"), py::arg("seed") = 20240817,
        py::arg("n_starts") = 20);

  py::class_<FieldSample>(m, "FieldSample")
      .def_readonly("theta", &FieldSample::theta)
      .def_readonly("phi", &FieldSample::phi)
      .def_readonly("z", &FieldSample::z)
      .def_readonly("u_theta", &FieldSample::u_theta)
      .def_readonly("u_phi", &FieldSample::u_phi)
      .def_readonly("w", &FieldSample::w)
      .def_readonly("T", &FieldSample::T)
      .def_readonly("S", &FieldSample::S);

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init([](std::vector<double> thetas, std::vector<double> phis,
                       std::vector<double> zs) {
             return GridSpec{std::move(thetas), std::move(phis), std::move(zs)};
           }),
           py::arg("thetas"), py::arg("phis"), py::arg("zs"))
      .def_readwrite("thetas", &GridSpec::thetas)
      .def_readwrite("phis", &GridSpec::phis)
      .def_readwrite("zs", &GridSpec::zs);

  m.def("reconstruct_fields", &reconstruct_fields, py::arg("state"),
        py::arg("cm"), py::arg("params"), py::arg("grid"));

  m.attr("__version__") = "0.1.0";
}
