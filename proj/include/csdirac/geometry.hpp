#pragma once

#include <array>
#include <complex>

namespace csdirac::geometry {

using Mat4 = std::array<std::complex<double>, 16>;  // 4x4, row-major

inline std::complex<double>& at(Mat4& m, int i, int j) { return m[4 * i + j]; }
inline const std::complex<double>& at(const Mat4& m, int i, int j) { return m[4 * i + j]; }

// Flat-space Dirac matrix gamma^(a), a = 0..3, in the standard representation.
Mat4 flat_gamma(int a);

// Position-dependent frame data for the conical metric
// ds^2 = dt^2 - dr^2 - rho^2 r^2 dphi^2 - dz^2 with deficit parameter rho.
struct FrameBundle {
  double rho = 1.0;
  double r = 1.0;
  double phi = 0.0;
  std::array<std::array<double, 4>, 4> tetrad{};  // e_(a)^mu: rows a, cols mu
  std::array<Mat4, 4> gammas{};                   // gamma^mu for mu = t, r, phi, z
  std::array<double, 4> metric_inv{};             // diagonal of g^{mu nu}
  Mat4 spin_connection_phi{};                     // the only nonzero connection component
};

// Assembles tetrad, curved gamma matrices, inverse metric, and the spin
// connection. Requires rho in (0, 1] and r > 0.
FrameBundle build_frame(double rho, double r, double phi);

// Max-entry norm of {gamma^mu, gamma^nu} - 2 g^{mu nu} I over all index pairs.
double clifford_residual(const FrameBundle& frame);

}  // namespace csdirac::geometry
