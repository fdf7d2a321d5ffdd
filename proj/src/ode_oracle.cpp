#include "csdirac/ode_oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "csdirac/numerics.hpp"
#include "csdirac/specfun.hpp"

namespace csdirac::ode_oracle {

SingleGridResult fd_single_grid(double gamma, double alpha, double R, int N,
                                int count, int target) {
  if (N < 200) throw std::invalid_argument("fd_single_grid: N must be >= 200");
  if (!(R > 0.0)) throw std::invalid_argument("fd_single_grid: R must be positive");
  if (count < 1 || target < 0 || target >= count)
    throw std::invalid_argument("fd_single_grid: bad count/target");

  SingleGridResult out;
  out.h = R / (N + 1);
  std::vector<double> diag(N), off(N - 1, -1.0 / (out.h * out.h));
  for (int i = 0; i < N; ++i) {
    const double r = (i + 1) * out.h;
    diag[i] = 2.0 / (out.h * out.h) + gamma * (gamma + 1.0) / (r * r) - 2.0 * alpha / r;
  }

  const auto eigenvalues = numerics::lowest_eigenvalues(diag, off, count);
  for (double lambda : eigenvalues) {
    if (lambda < 0.0) out.epsilons.push_back(std::sqrt(-lambda));
  }
  if (out.epsilons.empty())
    throw std::domain_error("fd_single_grid: no-bound-state (no negative eigenvalue)");
  if (static_cast<size_t>(target) >= out.epsilons.size())
    throw std::domain_error("fd_single_grid: no-bound-state at requested index");
  out.ground_vector = numerics::eigenvector(diag, off, eigenvalues[target]);
  return out;
}

std::vector<double> fd_spectrum(double gamma, double alpha,
                                const DiscretizationSpec& spec, int count) {
  if (spec.richardson_levels < 1)
    throw std::invalid_argument("fd_spectrum: richardson_levels must be >= 1");

  std::vector<std::vector<double>> per_level;
  size_t common = SIZE_MAX;
  for (int level = 0; level < spec.richardson_levels; ++level) {
    // N -> 2N+1 halves the step exactly.
    int N = spec.N;
    for (int d = 0; d < level; ++d) N = 2 * N + 1;
    const auto grid = fd_single_grid(gamma, alpha, spec.R, N, count, 0);
    per_level.push_back(grid.epsilons);
    common = std::min(common, grid.epsilons.size());
  }

  std::vector<double> extrapolated(common);
  for (size_t i = 0; i < common; ++i) {
    std::vector<double> sequence;
    for (const auto& eps : per_level) sequence.push_back(eps[i]);
    extrapolated[i] = numerics::richardson(sequence);
  }
  return extrapolated;
}

OracleComparison oracle_compare(const spectrum::EnergyLevel& level,
                                DiscretizationSpec spec) {
  if (!level.valid)
    throw std::invalid_argument("oracle_compare: level is not a valid bound state");

  OracleComparison cmp;
  cmp.epsilon_algebraic = level.epsilon;
  if (spec.R <= 0.0) spec.R = 30.0 / level.epsilon;

  const int count = level.qn.n_r + 1;
  const auto extrapolated = fd_spectrum(level.gamma, level.alpha, spec, count);
  if (extrapolated.size() < static_cast<size_t>(count))
    throw std::domain_error("oracle_compare: no-bound-state at requested n_r");
  cmp.epsilon_numeric = extrapolated[level.qn.n_r];
  cmp.relative_gap =
      std::abs(cmp.epsilon_algebraic - cmp.epsilon_numeric) / cmp.epsilon_algebraic;

  // Overlap of the finest-grid eigenvector with the sampled closed form.
  int N = spec.N;
  for (int d = 0; d + 1 < spec.richardson_levels; ++d) N = 2 * N + 1;
  const auto grid = fd_single_grid(level.gamma, level.alpha, spec.R, N, count, level.qn.n_r);
  double uu = 0.0, uf = 0.0, ff = 0.0;
  for (int i = 0; i < N; ++i) {
    const double r = (i + 1) * grid.h;
    const double f = std::pow(r, level.gamma + 1.0) * std::exp(-level.epsilon * r) *
                     specfun::laguerre(level.qn.n_r, 2.0 * level.gamma + 1.0,
                                       2.0 * level.epsilon * r);
    const double u = grid.ground_vector[i];
    uu += u * u;
    uf += u * f;
    ff += f * f;
  }
  cmp.eigenvector_overlap = std::abs(uf) / std::sqrt(uu * ff);
  return cmp;
}

}  // namespace csdirac::ode_oracle
