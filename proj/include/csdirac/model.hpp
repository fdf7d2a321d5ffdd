#pragma once

#include <array>
#include <optional>

namespace csdirac::model {

// Physical inputs, units c = hbar = 1.
struct ModelParams {
  double M = 1.0;      // mass
  double omega = 1.0;  // cyclotron-type frequency
  double rho = 1.0;    // deficit parameter, in (0, 1]
  double s1 = 0.0;     // Coulomb-type scalar strength
  double s2 = 0.0;     // constant scalar shift
};

struct QuantumNumbers {
  int m = 0;        // magnetic number
  double j = 0.5;   // total angular momentum, m + 1/2
  double k = 0.0;   // longitudinal momentum
  int s = +1;       // sign branch, +1 or -1
  int n_r = 0;      // radial quantum number, >= 0
};

QuantumNumbers make_quantum_numbers(int m, double k, int s, int n_r);

using Mat2 = std::array<double, 4>;  // 2x2, row-major

// Scalars and matrices shared by the spectrum, radial-state, and coherent
// modules, evaluated at a given energy E.
struct DerivedQuantities {
  double gamma = 0.0;           // sqrt(j^2 + rho^2 s1^2) / rho
  double alpha = 0.0;           // (M/rho) (omega j - rho s1 - rho s1 s2 / M)
  double k_lambda = 0.0;        // E + s sqrt(E^2 - k^2)
  double k_over_lambda = 0.0;   // E - s sqrt(E^2 - k^2)
  std::optional<double> lambda_sq_plus_one;  // 2 E k_lambda / k^2; absent for k = 0
  Mat2 mixing_matrix{};         // [[gamma - j/rho, -s1], [s1, gamma - j/rho]]
  Mat2 mixing_inverse{};        // valid only when s1 != 0
  double eta = 0.0;             // s sqrt(E^2 - k^2) + nu
  double nu = 0.0;              // (M omega rho s1 + (M + s2) j) / (gamma rho)
};

// Populates every derived quantity at energy E. Throws std::domain_error for
// E^2 < k^2 and std::invalid_argument for out-of-range parameters.
DerivedQuantities derive(const ModelParams& params, const QuantumNumbers& qn, double E);

// The 2x2 change of basis that diagonalizes the 1/r coupling matrix
// [[-j/rho, s1], [s1, j/rho]] into diag(gamma, -gamma).
struct CouplingTransform {
  Mat2 matrix{};
  Mat2 inverse{};
  double determinant = 0.0;
};

// Throws std::invalid_argument with a degenerate-diagonalization message when
// s1 = 0 (the coupling is already diagonal; callers use the identity).
CouplingTransform coupling_transform(const DerivedQuantities& d);

}  // namespace csdirac::model
