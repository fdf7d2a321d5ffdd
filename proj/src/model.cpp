#include "csdirac/model.hpp"

#include <cmath>
#include <stdexcept>

namespace csdirac::model {

QuantumNumbers make_quantum_numbers(int m, double k, int s, int n_r) {
  if (s != 1 && s != -1) throw std::invalid_argument("quantum numbers: s must be +1 or -1");
  if (n_r < 0) throw std::invalid_argument("quantum numbers: n_r must be >= 0");
  QuantumNumbers qn;
  qn.m = m;
  qn.j = m + 0.5;
  qn.k = k;
  qn.s = s;
  qn.n_r = n_r;
  return qn;
}

DerivedQuantities derive(const ModelParams& params, const QuantumNumbers& qn, double E) {
  if (!(params.M > 0.0)) throw std::invalid_argument("derive: M must be positive");
  if (!(params.rho > 0.0) || params.rho > 1.0)
    throw std::invalid_argument("derive: rho must lie in (0, 1]");
  if (qn.s != 1 && qn.s != -1) throw std::invalid_argument("derive: s must be +1 or -1");
  const double trans_sq = E * E - qn.k * qn.k;
  if (trans_sq < 0.0) throw std::domain_error("derive: E^2 < k^2, sqrt(E^2 - k^2) not real");

  DerivedQuantities d;
  const double rho = params.rho, j = qn.j, s1 = params.s1;
  d.gamma = std::sqrt(j * j + rho * rho * s1 * s1) / rho;
  d.alpha = (params.M / rho) * (params.omega * j - rho * s1 - rho * s1 * params.s2 / params.M);

  const double root = qn.s * std::sqrt(trans_sq);
  d.k_lambda = E + root;
  d.k_over_lambda = E - root;
  if (qn.k != 0.0) d.lambda_sq_plus_one = 2.0 * E * d.k_lambda / (qn.k * qn.k);

  const double a = d.gamma - j / rho;
  d.mixing_matrix = {a, -s1, s1, a};
  if (s1 != 0.0) {
    const double b = 1.0 / (2.0 * d.gamma);
    const double c = rho * s1 / (2.0 * d.gamma * (d.gamma * rho - j));
    d.mixing_inverse = {b, c, -c, b};
  } else {
    d.mixing_inverse = {0.0, 0.0, 0.0, 0.0};
  }

  d.nu = (params.M * params.omega * rho * s1 + (params.M + params.s2) * j) / (d.gamma * rho);
  d.eta = root + d.nu;
  return d;
}

CouplingTransform coupling_transform(const DerivedQuantities& d) {
  const double s1 = -d.mixing_matrix[1];
  if (s1 == 0.0)
    throw std::invalid_argument(
        "coupling_transform: degenerate-diagonalization (s1 = 0 leaves the coupling "
        "already diagonal; use the identity transform)");
  CouplingTransform t;
  t.matrix = d.mixing_matrix;
  t.inverse = d.mixing_inverse;
  const double a = d.mixing_matrix[0];
  t.determinant = a * a + s1 * s1;
  return t;
}

}  // namespace csdirac::model
