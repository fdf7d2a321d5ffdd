#pragma once

#include <string>
#include <vector>

#include "csdirac/model.hpp"

namespace csdirac::spectrum {

// One bound-state level: quantization epsilon = alpha / (n_r + gamma + 1),
// E = sign_E * sqrt(k^2 + M^2 omega^2 + (M+s2)^2 - epsilon^2).
struct EnergyLevel {
  model::ModelParams params;
  model::QuantumNumbers qn;
  double gamma = 0.0;
  double alpha = 0.0;
  double epsilon = 0.0;
  double E = 0.0;  // NaN when the radicand is negative
  int sign_E = +1;
  bool valid = false;
  std::vector<std::string> reasons;  // empty when valid
};

// Never throws for physically inadmissible inputs; the level comes back with
// valid=false and ordered reason codes (nonpositive-coupling, imaginary-E,
// sublongitudinal-E, degenerate-diagonalization) so sweeps can keep going.
EnergyLevel energy_level(const model::ModelParams& params,
                         const model::QuantumNumbers& qn, int sign_E);

// Positive-root levels for n_r = 0..n_r_max with the template's m, k, s.
std::vector<EnergyLevel> spectrum_sweep(const model::ModelParams& params,
                                        const model::QuantumNumbers& qn_template,
                                        int n_r_max);

// Derived quantities evaluated at this level's energy. Requires level.valid.
model::DerivedQuantities level_derived(const EnergyLevel& level);

}  // namespace csdirac::spectrum
