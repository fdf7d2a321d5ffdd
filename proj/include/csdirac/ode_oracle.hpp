#pragma once

#include <vector>

#include "csdirac/spectrum.hpp"

namespace csdirac::ode_oracle {

// Uniform-grid second-order discretization of the decoupled radial operator
//   (-d^2/dr^2 + gamma(gamma+1)/r^2 - 2 alpha/r) F = -epsilon^2 F
// with Dirichlet conditions at 0 and R.
struct DiscretizationSpec {
  int N = 1999;              // interior grid points on the coarsest level
  double R = 30.0;           // domain cutoff
  int richardson_levels = 3; // grid doublings used for extrapolation
};

// Lowest `count` bound epsilons, extrapolated across richardson_levels grids
// whose step halves exactly each level. Throws std::domain_error when no
// negative eigenvalue exists (no bound state).
std::vector<double> fd_spectrum(double gamma, double alpha,
                                const DiscretizationSpec& spec, int count);

// Pre-extrapolation epsilons on a single grid, plus the eigenvector of the
// lowest requested state (unit discrete norm), for overlap checks.
struct SingleGridResult {
  double h = 0.0;
  std::vector<double> epsilons;
  std::vector<double> ground_vector;  // eigenvector of epsilons[target]
};
SingleGridResult fd_single_grid(double gamma, double alpha, double R, int N,
                                int count, int target);

struct OracleComparison {
  double epsilon_algebraic = 0.0;
  double epsilon_numeric = 0.0;
  double relative_gap = 0.0;
  double eigenvector_overlap = 0.0;  // discrete L2 inner product, both unit norm
};

// Cross-checks a valid level against the finite-difference spectrum; the
// cutoff R is chosen adaptively as 30 / epsilon when spec.R <= 0.
OracleComparison oracle_compare(const spectrum::EnergyLevel& level,
                                DiscretizationSpec spec);

}  // namespace csdirac::ode_oracle
