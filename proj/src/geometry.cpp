#include "csdirac/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace csdirac::geometry {

namespace {

using C = std::complex<double>;
constexpr C I{0.0, 1.0};

Mat4 zero() { return Mat4{}; }

// Pauli matrix sigma^a embedded into the off-diagonal (upper-right) block with
// a minus in the lower-left block, per the standard representation.
Mat4 block_off_diagonal(const std::array<C, 4>& sigma) {
  Mat4 g = zero();
  at(g, 0, 2) = sigma[0];
  at(g, 0, 3) = sigma[1];
  at(g, 1, 2) = sigma[2];
  at(g, 1, 3) = sigma[3];
  at(g, 2, 0) = -sigma[0];
  at(g, 2, 1) = -sigma[1];
  at(g, 3, 0) = -sigma[2];
  at(g, 3, 1) = -sigma[3];
  return g;
}

}  // namespace

Mat4 flat_gamma(int a) {
  switch (a) {
    case 0: {
      Mat4 g = zero();
      at(g, 0, 0) = 1.0;
      at(g, 1, 1) = 1.0;
      at(g, 2, 2) = -1.0;
      at(g, 3, 3) = -1.0;
      return g;
    }
    case 1:
      return block_off_diagonal({0.0, 1.0, 1.0, 0.0});
    case 2:
      return block_off_diagonal({0.0, -I, I, 0.0});
    case 3:
      return block_off_diagonal({1.0, 0.0, 0.0, -1.0});
    default:
      throw std::invalid_argument("flat_gamma: index must be 0..3");
  }
}

FrameBundle build_frame(double rho, double r, double phi) {
  if (!(rho > 0.0) || rho > 1.0)
    throw std::invalid_argument("build_frame: deficit parameter must lie in (0, 1]");
  if (!(r > 0.0)) throw std::invalid_argument("build_frame: radius must be positive");

  FrameBundle frame;
  frame.rho = rho;
  frame.r = r;
  frame.phi = phi;

  const double c = std::cos(phi), s = std::sin(phi);
  frame.tetrad = {{{1.0, 0.0, 0.0, 0.0},
                   {0.0, c, -s / (rho * r), 0.0},
                   {0.0, s, c / (rho * r), 0.0},
                   {0.0, 0.0, 0.0, 1.0}}};

  frame.metric_inv = {1.0, -1.0, -1.0 / (rho * rho * r * r), -1.0};

  for (int mu = 0; mu < 4; ++mu) {
    Mat4 g = zero();
    for (int a = 0; a < 4; ++a) {
      const double e = frame.tetrad[a][mu];
      if (e == 0.0) continue;
      const Mat4 ga = flat_gamma(a);
      for (int k = 0; k < 16; ++k) g[k] += e * ga[k];
    }
    frame.gammas[mu] = g;
  }

  // Gamma_phi = i (1 - rho) / 2 * Sigma^3 with Sigma^3 = diag(1, -1, 1, -1).
  frame.spin_connection_phi = zero();
  const C coeff = I * (1.0 - rho) * 0.5;
  at(frame.spin_connection_phi, 0, 0) = coeff;
  at(frame.spin_connection_phi, 1, 1) = -coeff;
  at(frame.spin_connection_phi, 2, 2) = coeff;
  at(frame.spin_connection_phi, 3, 3) = -coeff;
  return frame;
}

double clifford_residual(const FrameBundle& frame) {
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const Mat4& a = frame.gammas[mu];
      const Mat4& b = frame.gammas[nu];
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          C anti = 0.0;
          for (int k = 0; k < 4; ++k)
            anti += at(a, i, k) * at(b, k, j) + at(b, i, k) * at(a, k, j);
          if (i == j && mu == nu) anti -= 2.0 * frame.metric_inv[mu];  // metric is diagonal
          const double mag = std::abs(anti);
          if (mag > worst) worst = mag;
        }
      }
    }
  }
  return worst;
}

}  // namespace csdirac::geometry
