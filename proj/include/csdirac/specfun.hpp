#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace csdirac::specfun {

// Associated Laguerre polynomial L_n^a(x) by upward recurrence; n < 0 gives 0.
double laguerre(int n, double a, double x);

// d/dx L_n^a(x) = -L_{n-1}^{a+1}(x).
double laguerre_derivative(int n, double a, double x);

// Confluent hypergeometric M(a, b, x) by series; terminates for a a
// nonpositive integer. Requires b not a nonpositive integer.
double kummer_m(double a, double b, double x);

// Geometric Laguerre sum  S = sum_{s=0}^{terms} xi^s L_s^a(x), accumulated in
// extended precision: adjacent terms cancel by many orders for |xi| ~ 0.5.
std::complex<double> laguerre_geometric_sum(double a, double x,
                                            std::complex<double> xi, int terms);

// Gauss-Laguerre rule for the weight x^alpha e^{-x} on [0, inf).
// Orders are capped (<= 180) so that weight-stripping factors e^{node} stay
// finite in double precision.
struct QuadratureRule {
  double alpha = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_laguerre(int order, double alpha);

// integral over [0, inf) of f(x) x^alpha e^{-x} dx.
double integrate_weighted(const QuadratureRule& rule,
                          const std::function<double(double)>& f);

// integral over [0, inf) of g(x) dx, for g decaying like x^alpha e^{-x};
// the rule's weight is stripped node by node.
double integrate_halfline(const QuadratureRule& rule,
                          const std::function<double(double)>& g);

// Cross-check of two Laguerre integral identities against quadrature.
//   which = 1: integral of e^{-x} x^{a+2} [L_{n-1}^a(x)]^2,
//              closed form Gamma(n+a)/Gamma(n) * [6(n-1)(n+a) + (a+1)(a+2)].
//   which = 2: integral of e^{-x} x^{a+1} L_{n-1}^a(x) L_n^{a-2}(x)
//              (the convergent reading; the e^{+x} variant diverges),
//              reference closed form -Gamma(n+a+1)/Gamma(n) * (5n+3a-3),
//              which is known to disagree with the convergent integral.
struct IdentityReport {
  double quadrature = 0.0;
  double closed_form = 0.0;
  double relative_gap = 0.0;
};
IdentityReport laguerre_identity(int which, int n, double a);

}  // namespace csdirac::specfun
