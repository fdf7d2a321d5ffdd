#include "csdirac/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

static_assert(std::numeric_limits<long double>::digits >= 64,
              "extended-precision accumulation requires 80-bit long double");

namespace csdirac::specfun {

double laguerre(int n, double a, double x) {
  if (n < 0) return 0.0;
  if (n == 0) return 1.0;
  double lkm1 = 1.0;
  double lk = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    const double lkp1 = ((2.0 * k + a + 1.0 - x) * lk - (k + a) * lkm1) / (k + 1.0);
    lkm1 = lk;
    lk = lkp1;
  }
  return lk;
}

double laguerre_derivative(int n, double a, double x) {
  if (n <= 0) return 0.0;
  return -laguerre(n - 1, a + 1.0, x);
}

double kummer_m(double a, double b, double x) {
  if (b <= 0.0 && b == std::floor(b))
    throw std::invalid_argument("kummer_m: b must not be a nonpositive integer");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 2000; ++k) {
    term *= (a + k) * x / ((b + k) * (k + 1.0));
    sum += term;
    if (term == 0.0) break;  // terminating polynomial case
    if (std::abs(term) < 1e-18 * std::abs(sum) && k > 4) break;
  }
  return sum;
}

std::complex<double> laguerre_geometric_sum(double a, double x,
                                            std::complex<double> xi, int terms) {
  if (terms < 0) throw std::invalid_argument("laguerre_geometric_sum: terms < 0");
  using CLD = std::complex<long double>;
  const long double al = a, xl = x;
  const CLD xil(static_cast<long double>(xi.real()), static_cast<long double>(xi.imag()));

  long double lkm1 = 1.0L;             // L_0
  CLD power(1.0L, 0.0L);               // xi^0
  CLD sum(lkm1, 0.0L);
  if (terms == 0)
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};

  long double lk = 1.0L + al - xl;     // L_1
  power *= xil;
  sum += power * lk;
  for (int s = 1; s < terms; ++s) {
    const long double lkp1 =
        ((2.0L * s + al + 1.0L - xl) * lk - (s + al) * lkm1) / (s + 1.0L);
    lkm1 = lk;
    lk = lkp1;
    power *= xil;
    sum += power * lk;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

namespace {

// Value of L_n^a(x) together with L_{n-1}^a(x), for Newton steps.
void laguerre_pair(int n, double a, double x, double& ln, double& lnm1) {
  double lkm1 = 1.0;
  double lk = 1.0 + a - x;
  if (n == 0) {
    ln = 1.0;
    lnm1 = 0.0;
    return;
  }
  for (int k = 1; k < n; ++k) {
    const double lkp1 = ((2.0 * k + a + 1.0 - x) * lk - (k + a) * lkm1) / (k + 1.0);
    lkm1 = lk;
    lk = lkp1;
  }
  ln = lk;
  lnm1 = lkm1;
}

}  // namespace

QuadratureRule gauss_laguerre(int order, double alpha) {
  if (order < 1 || order > 180)
    throw std::invalid_argument("gauss_laguerre: order must be in [1, 180]");
  if (alpha <= -1.0) throw std::invalid_argument("gauss_laguerre: alpha must exceed -1");

  QuadratureRule rule;
  rule.alpha = alpha;
  rule.nodes.resize(order);
  rule.weights.resize(order);

  double x = 0.0;
  for (int i = 0; i < order; ++i) {
    if (i == 0) {
      x = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * order + 1.8 * alpha);
    } else if (i == 1) {
      x += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * order);
    } else {
      const double ai = i - 1;
      x += ((1.0 + 2.55 * ai) / (1.9 * ai) + 1.26 * ai * alpha / (1.0 + 3.5 * ai)) *
           (x - rule.nodes[i - 2]) / (1.0 + 0.3 * alpha);
    }
    double ln = 0.0, lnm1 = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
      laguerre_pair(order, alpha, x, ln, lnm1);
      // x L'_n = n L_n - (n + a) L_{n-1}
      const double deriv = (order * ln - (order + alpha) * lnm1) / x;
      const double step = ln / deriv;
      x -= step;
      if (std::abs(step) <= 1e-15 * std::abs(x)) break;
    }
    laguerre_pair(order, alpha, x, ln, lnm1);
    rule.nodes[i] = x;
    const double lnp1 = laguerre(order + 1, alpha, x);
    rule.weights[i] = std::exp(std::lgamma(order + alpha + 1.0) - std::lgamma(order + 1.0)) *
                      x / ((order + 1.0) * (order + 1.0) * lnp1 * lnp1);
  }
  return rule;
}

double integrate_weighted(const QuadratureRule& rule,
                          const std::function<double(double)>& f) {
  double sum = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(rule.nodes[i]);
  return sum;
}

double integrate_halfline(const QuadratureRule& rule,
                          const std::function<double(double)>& g) {
  double sum = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    sum += rule.weights[i] * std::exp(x - rule.alpha * std::log(x)) * g(x);
  }
  return sum;
}

IdentityReport laguerre_identity(int which, int n, double a) {
  if (n < 1) throw std::invalid_argument("laguerre_identity: n must be >= 1");
  IdentityReport report;
  if (which == 1) {
    const auto rule = gauss_laguerre(96, a + 2.0);
    report.quadrature = integrate_weighted(rule, [&](double x) {
      const double v = laguerre(n - 1, a, x);
      return v * v;
    });
    report.closed_form = std::exp(std::lgamma(n + a) - std::lgamma(n)) *
                         (6.0 * (n - 1.0) * (n + a) + (a + 1.0) * (a + 2.0));
  } else if (which == 2) {
    const auto rule = gauss_laguerre(96, a + 1.0);
    report.quadrature = integrate_weighted(rule, [&](double x) {
      return laguerre(n - 1, a, x) * laguerre(n, a - 2.0, x);
    });
    report.closed_form =
        -std::exp(std::lgamma(n + a + 1.0) - std::lgamma(n)) * (5.0 * n + 3.0 * a - 3.0);
  } else {
    throw std::invalid_argument("laguerre_identity: which must be 1 or 2");
  }
  const double scale =
      std::max({std::abs(report.quadrature), std::abs(report.closed_form), 1e-300});
  report.relative_gap = std::abs(report.quadrature - report.closed_form) / scale;
  return report;
}

}  // namespace csdirac::specfun
