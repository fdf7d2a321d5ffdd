#pragma once

#include <complex>
#include <vector>

namespace csdirac::numerics {

// Lowest `count` eigenvalues of the symmetric tridiagonal matrix with main
// diagonal `diag` and subdiagonal `off` (off.size() == diag.size()-1),
// computed by Sturm-count bisection to near machine precision.
std::vector<double> lowest_eigenvalues(const std::vector<double>& diag,
                                       const std::vector<double>& off,
                                       int count);

// Unit-norm eigenvector for an already-converged eigenvalue, by inverse
// iteration with a partially pivoted tridiagonal solve.
std::vector<double> eigenvector(const std::vector<double>& diag,
                                const std::vector<double>& off,
                                double eigenvalue);

// Not-a-knot cubic spline through (x, y); evaluates to 0 outside [x front, x back].
class CubicSpline {
 public:
  CubicSpline(std::vector<double> x, std::vector<double> y);
  double operator()(double xq) const;

 private:
  std::vector<double> x_, y_, b_, c_, d_;
};

// Small dense complex matrix, row-major.
struct ComplexMatrix {
  int n = 0;
  std::vector<std::complex<double>> a;

  explicit ComplexMatrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim) {}
  std::complex<double>& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const std::complex<double>& operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * n + j];
  }
};

ComplexMatrix multiply(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
std::vector<std::complex<double>> apply(const ComplexMatrix& m,
                                        const std::vector<std::complex<double>>& v);

// exp(M) by scaling-and-squaring with a machine-precision Taylor kernel;
// intended for small, moderately normed matrices (Fock-space generators).
ComplexMatrix matrix_exponential(const ComplexMatrix& m);

// Extrapolates a sequence of estimates on grids h, h/2, h/4, ... assuming an
// even-power error expansion c2 h^2 + c4 h^4 + ...; returns the final value.
double richardson(std::vector<double> values);

}  // namespace csdirac::numerics
