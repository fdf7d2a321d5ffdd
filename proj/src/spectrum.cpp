#include "csdirac/spectrum.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace csdirac::spectrum {

EnergyLevel energy_level(const model::ModelParams& params,
                         const model::QuantumNumbers& qn, int sign_E) {
  if (sign_E != 1 && sign_E != -1)
    throw std::invalid_argument("energy_level: sign_E must be +1 or -1");
  if (!(params.M > 0.0)) throw std::invalid_argument("energy_level: M must be positive");
  if (!(params.rho > 0.0) || params.rho > 1.0)
    throw std::invalid_argument("energy_level: rho must lie in (0, 1]");
  if (qn.n_r < 0) throw std::invalid_argument("energy_level: n_r must be >= 0");

  EnergyLevel level;
  level.params = params;
  level.qn = qn;
  level.sign_E = sign_E;

  const double rho = params.rho, j = qn.j, s1 = params.s1;
  level.gamma = std::sqrt(j * j + rho * rho * s1 * s1) / rho;
  level.alpha =
      (params.M / rho) * (params.omega * j - rho * s1 - rho * s1 * params.s2 / params.M);
  level.epsilon = level.alpha / (qn.n_r + level.gamma + 1.0);

  if (!(level.alpha > 0.0)) level.reasons.push_back("nonpositive-coupling");

  const double ms2 = params.M + params.s2;
  const double radicand = qn.k * qn.k + params.M * params.M * params.omega * params.omega +
                          ms2 * ms2 - level.epsilon * level.epsilon;
  if (radicand < 0.0) {
    level.reasons.push_back("imaginary-E");
    level.E = std::numeric_limits<double>::quiet_NaN();
  } else {
    level.E = sign_E * std::sqrt(radicand);
    if (radicand < qn.k * qn.k) level.reasons.push_back("sublongitudinal-E");
  }

  if (level.gamma * rho - j <= 0.0) level.reasons.push_back("degenerate-diagonalization");

  level.valid = level.reasons.empty();
  return level;
}

std::vector<EnergyLevel> spectrum_sweep(const model::ModelParams& params,
                                        const model::QuantumNumbers& qn_template,
                                        int n_r_max) {
  if (n_r_max < 0) throw std::invalid_argument("spectrum_sweep: n_r_max must be >= 0");
  std::vector<EnergyLevel> levels;
  levels.reserve(n_r_max + 1);
  for (int n_r = 0; n_r <= n_r_max; ++n_r) {
    model::QuantumNumbers qn = qn_template;
    qn.n_r = n_r;
    levels.push_back(energy_level(params, qn, +1));
  }
  return levels;
}

model::DerivedQuantities level_derived(const EnergyLevel& level) {
  if (!level.valid)
    throw std::invalid_argument("level_derived: level is not a valid bound state");
  return model::derive(level.params, level.qn, level.E);
}

}  // namespace csdirac::spectrum
