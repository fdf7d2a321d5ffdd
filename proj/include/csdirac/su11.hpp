#pragma once

#include <complex>
#include <vector>

#include "csdirac/report.hpp"

namespace csdirac::su11 {

// A complex function sampled on a grid that is uniform either in r or in
// ln r; finite differences detect which. boundary_pad entries at each end are
// excluded from masked norms so one-sided stencil error never drives a check.
struct GridFunction {
  std::vector<double> grid;
  std::vector<std::complex<double>> values;
  int boundary_pad = 8;
};

enum class Realization { schrodinger, tilting };

struct GeneratorContext {
  double gamma = 1.0;
  double epsilon = 1.0;
  double alpha = 1.0;
  Realization realization = Realization::tilting;
};

// Tilted generators built from r, d/dr: compact operators whose spectrum is
// the Sturmian ladder. The b-family is the energy-carrying realization with
// scale epsilon; it requires realization == schrodinger, the a-family
// requires tilting.
enum class Generator { a0, a1, a2, k_plus, k_minus, b3, b_plus, b_minus };

GridFunction apply_generator(const GeneratorContext& ctx, Generator which,
                             const GridFunction& f);

// Root-mean-square of the values with boundary_pad entries masked per end.
double masked_rms(const GridFunction& f);

// Integral of conj(a) b r dr by the trapezoid rule in the grid variable.
std::complex<double> inner(const GridFunction& a, const GridFunction& b);

std::vector<double> log_grid(double rmin, double rmax, int points);

enum class AlgebraCheck {
  commutators,
  casimir,
  factorization,
  tilting_scaling,
  ladder,
  displacement_normal_form
};

// Verifies one family of operator identities on internally constructed grids
// (or, for the displacement check, in a truncated Fock space). `points`
// controls the grid resolution where one is used.
CheckList algebra_check(const GeneratorContext& ctx, AlgebraCheck which,
                        int points = 2048);

}  // namespace csdirac::su11
