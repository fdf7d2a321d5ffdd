#pragma once

#include <complex>
#include <vector>

#include "csdirac/spectrum.hpp"

namespace csdirac::coherent {

// The displacement-operator orbit of the lowest radial level. n_r in qn is
// ignored: the family is anchored at n_r = 0, epsilon = alpha / (gamma + 1).
struct CoherentParams {
  std::complex<double> xi;
  model::ModelParams params;
  model::QuantumNumbers qn;
  int truncation_N = 200;
};

enum class Mode { closed, series };

struct RadialPair {
  std::complex<double> F_coh;
  std::complex<double> G_coh;
};

// Weighted sum of bound-shape basis functions (series mode, any complex xi
// with |xi| < 1) or its resummed exponential form (closed mode, which is only
// defined for real xi in [0, 1) and throws an unsupported-branch error
// otherwise).
RadialPair coherent_radial(const CoherentParams& cp, Mode mode, double r);

struct SpinorSample {
  double F_plus_coh = 0.0;
  double G_minus_coh = 0.0;
  double C_n_quadrature = 0.0;  // authoritative: enforces relativistic norm 1
  double C_n_reference = 0.0;   // reference closed form, diagnostic only
  double D_ratio = 0.0;         // lower/upper coefficient ratio D_n / C_n
  double relative_gap = 0.0;
};

// Closed-mode spinor (real xi); requires k != 0 for the norm weight.
SpinorSample coherent_spinor(const CoherentParams& cp, double r);

// Lowest-weight displacement coefficients
// (1-|xi|^2)^k sqrt(Gamma(s+2k)/(s! Gamma(2k))) xi^s for s = 0..N.
std::vector<std::complex<double>> perelomov_fock(double k, std::complex<double> xi, int N);

// The n_r = 0 positive-root level the family is built on.
spectrum::EnergyLevel anchor_level(const CoherentParams& cp);

}  // namespace csdirac::coherent
