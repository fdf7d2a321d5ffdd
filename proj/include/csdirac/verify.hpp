#pragma once

#include "csdirac/model.hpp"
#include "csdirac/report.hpp"

namespace csdirac::verify {

// Model point the scenario-dependent suites evaluate at.
struct Scenario {
  model::ModelParams params;
  model::QuantumNumbers qn;
};

// Frame construction and the anticommutator identity at random sample points.
CheckList check_clifford();

// Quadrature rules, Laguerre/Kummer agreement, and the two reference
// integral identities (the second is reported as a detected divergence).
CheckList check_specfun();

// Spectrum vs finite differences, eigenfunction residuals, normalization,
// scaling behavior, and ground states. Oracle rows cover n_r = 0..n_r_max.
CheckList check_spectrum(const Scenario& sc, int n_r_max = 2);

// One oracle row per level, for tabular output alongside the check rows.
struct OracleRow {
  int n_r = 0;
  double epsilon_algebraic = 0.0;
  double epsilon_numeric = 0.0;
  double relative_gap = 0.0;
  double eigenvector_overlap = 0.0;
  bool valid = false;
  std::string reason;
};
std::vector<OracleRow> oracle_table(const Scenario& sc, int n_r_max);

// Operator algebra: commutators, Casimir, factorization, tilting scaling,
// ladder elements, displacement normal form.
CheckList check_su11(const Scenario& sc, int grid_points = 2048);

// Coherent family: series vs closed form, reductions, normalization, the
// weight sums, and the documented closed-form divergences.
CheckList check_coherent(const Scenario& sc);

// Every suite above, concatenated in a fixed order.
CheckList check_all(const Scenario& sc);

bool all_pass(const CheckList& rows);

}  // namespace csdirac::verify
