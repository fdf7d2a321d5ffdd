#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "csdirac/coherent.hpp"
#include "csdirac/geometry.hpp"
#include "csdirac/radial_states.hpp"
#include "csdirac/spectrum.hpp"
#include "csdirac/verify.hpp"

namespace py = pybind11;
using namespace csdirac;

namespace {

model::ModelParams make_params(double M, double omega, double rho, double s1, double s2) {
  return model::ModelParams{M, omega, rho, s1, s2};
}

py::dict level_dict(const spectrum::EnergyLevel& level) {
  py::dict d;
  d["n_r"] = level.qn.n_r;
  d["gamma"] = level.gamma;
  d["alpha"] = level.alpha;
  d["epsilon"] = level.epsilon;
  d["E"] = level.E;
  d["sign_E"] = level.sign_E;
  d["valid"] = level.valid;
  d["reasons"] = level.reasons;
  return d;
}

py::list check_rows(const CheckList& rows) {
  py::list out;
  for (const auto& row : rows) {
    py::dict d;
    d["check"] = row.check;
    d["residual"] = row.residual;
    d["tolerance"] = row.tolerance;
    d["pass"] = row.pass;
    d["note"] = row.note;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Bound states of a Dirac particle around a cosmic string";

  mod.def(
      "spectrum_level",
      [](double M, double omega, double rho, double s1, double s2, int m, double k, int s,
         int n_r, int sign_E) {
        const auto level = spectrum::energy_level(
            make_params(M, omega, rho, s1, s2), model::make_quantum_numbers(m, k, s, n_r),
            sign_E);
        return level_dict(level);
      },
      py::arg("M"), py::arg("omega"), py::arg("rho"), py::arg("s1"), py::arg("s2"),
      py::arg("m"), py::arg("k"), py::arg("s"), py::arg("n_r"), py::arg("sign_E") = +1);

  mod.def(
      "spectrum_sweep",
      [](double M, double omega, double rho, double s1, double s2, int m, double k, int s,
         int n_r_max) {
        py::list out;
        for (const auto& level :
             spectrum::spectrum_sweep(make_params(M, omega, rho, s1, s2),
                                      model::make_quantum_numbers(m, k, s, 0), n_r_max))
          out.append(level_dict(level));
        return out;
      },
      py::arg("M"), py::arg("omega"), py::arg("rho"), py::arg("s1"), py::arg("s2"),
      py::arg("m"), py::arg("k"), py::arg("s"), py::arg("n_r_max") = 5);

  mod.def(
      "wavefunction_table",
      [](double M, double omega, double rho, double s1, double s2, int m, double k, int s,
         int n_r, const std::vector<double>& radii) {
        const auto level = spectrum::energy_level(
            make_params(M, omega, rho, s1, s2), model::make_quantum_numbers(m, k, s, n_r),
            +1);
        if (!level.valid) throw std::domain_error("no bound state for these parameters");
        const auto st = radial::make_radial_state(level);
        std::vector<double> F, G, F_plus, G_minus;
        for (double r : radii) {
          const auto sample = radial::radial_spinor(st, r);
          F.push_back(sample.F);
          G.push_back(sample.G);
          F_plus.push_back(sample.F_plus);
          G_minus.push_back(sample.G_minus);
        }
        py::dict d;
        d["r"] = radii;
        d["F"] = F;
        d["G"] = G;
        d["F_plus"] = F_plus;
        d["G_minus"] = G_minus;
        d["level"] = level_dict(level);
        return d;
      },
      py::arg("M"), py::arg("omega"), py::arg("rho"), py::arg("s1"), py::arg("s2"),
      py::arg("m"), py::arg("k"), py::arg("s"), py::arg("n_r"), py::arg("radii"));

  mod.def(
      "coherent_table",
      [](double M, double omega, double rho, double s1, double s2, int m, double k, int s,
         std::complex<double> xi, const std::string& mode, int N,
         const std::vector<double>& radii) {
        coherent::CoherentParams cp{xi, make_params(M, omega, rho, s1, s2),
                                    model::make_quantum_numbers(m, k, s, 0), N};
        coherent::Mode which;
        if (mode == "closed")
          which = coherent::Mode::closed;
        else if (mode == "series")
          which = coherent::Mode::series;
        else
          throw std::invalid_argument("mode must be closed or series");
        std::vector<std::complex<double>> F_coh, G_coh;
        for (double r : radii) {
          const auto pair = coherent::coherent_radial(cp, which, r);
          F_coh.push_back(pair.F_coh);
          G_coh.push_back(pair.G_coh);
        }
        py::dict d;
        d["r"] = radii;
        d["F_coh"] = F_coh;
        d["G_coh"] = G_coh;
        d["anchor"] = level_dict(coherent::anchor_level(cp));
        return d;
      },
      py::arg("M"), py::arg("omega"), py::arg("rho"), py::arg("s1"), py::arg("s2"),
      py::arg("m"), py::arg("k"), py::arg("s"), py::arg("xi"), py::arg("mode") = "closed",
      py::arg("N") = 200, py::arg("radii"));

  mod.def(
      "perelomov_fock",
      [](double k, std::complex<double> xi, int N) { return coherent::perelomov_fock(k, xi, N); },
      py::arg("k"), py::arg("xi"), py::arg("N") = 100);

  mod.def(
      "clifford_residual",
      [](double rho, double r, double phi) {
        return geometry::clifford_residual(geometry::build_frame(rho, r, phi));
      },
      py::arg("rho"), py::arg("r"), py::arg("phi") = 0.0);

  mod.def(
      "verify_suite",
      [](const std::string& suite, double M, double omega, double rho, double s1, double s2,
         int m, double k, int s, int n_r_max, int grid) {
        const verify::Scenario sc{make_params(M, omega, rho, s1, s2),
                                  model::make_quantum_numbers(m, k, s, 0)};
        if (suite == "clifford") return check_rows(verify::check_clifford());
        if (suite == "specfun") return check_rows(verify::check_specfun());
        if (suite == "spectrum") return check_rows(verify::check_spectrum(sc, n_r_max));
        if (suite == "su11") return check_rows(verify::check_su11(sc, grid));
        if (suite == "coherent") return check_rows(verify::check_coherent(sc));
        if (suite == "all") return check_rows(verify::check_all(sc));
        throw std::invalid_argument("unknown suite: " + suite);
      },
      py::arg("suite"), py::arg("M") = 1.0, py::arg("omega") = 2.0, py::arg("rho") = 0.75,
      py::arg("s1") = 0.8, py::arg("s2") = 0.3, py::arg("m") = 1, py::arg("k") = 0.6,
      py::arg("s") = +1, py::arg("n_r_max") = 2, py::arg("grid") = 2048);
}
