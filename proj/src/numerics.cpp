#include "csdirac/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace csdirac::numerics {

namespace {

// Number of eigenvalues of the tridiagonal matrix strictly below x, from the
// sign changes of the LDL^T pivot sequence.
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
  const size_t n = d.size();
  int count = 0;
  double q = d[0] - x;
  if (q < 0.0) ++count;
  for (size_t i = 1; i < n; ++i) {
    double denom = q;
    if (denom == 0.0) denom = std::numeric_limits<double>::min();
    q = d[i] - x - e[i - 1] * e[i - 1] / denom;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> lowest_eigenvalues(const std::vector<double>& diag,
                                       const std::vector<double>& off,
                                       int count) {
  const size_t n = diag.size();
  if (n == 0 || off.size() + 1 != n) throw std::invalid_argument("bad tridiagonal shape");
  if (count < 1 || static_cast<size_t>(count) > n) throw std::invalid_argument("bad eigenvalue count");

  // Gershgorin bounds.
  double lo = diag[0], hi = diag[0];
  for (size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(off[i - 1]);
    if (i + 1 < n) radius += std::abs(off[i]);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }

  std::vector<double> values(count);
  for (int k = 0; k < count; ++k) {
    double a = lo, b = hi;
    while (true) {
      const double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      if (sturm_count(diag, off, mid) >= k + 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
    values[k] = 0.5 * (a + b);
    lo = values[k];  // eigenvalues are requested in ascending order
  }
  return values;
}

namespace {

// Solves (T - lambda I) x = b with Gaussian elimination and partial pivoting;
// the factorization fills in a second superdiagonal.
void shifted_tridiag_solve(const std::vector<double>& d, const std::vector<double>& e,
                           double lambda, std::vector<double>& x) {
  const size_t n = d.size();
  std::vector<double> a(n), b(n, 0.0), c(n, 0.0);  // diag, super1, super2
  std::vector<double> sub(n, 0.0);                 // subdiagonal (mutable copy)
  for (size_t i = 0; i < n; ++i) a[i] = d[i] - lambda;
  for (size_t i = 0; i + 1 < n; ++i) {
    b[i] = e[i];
    sub[i + 1] = e[i];
  }

  const double tiny = std::numeric_limits<double>::min() * 4.0;
  for (size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(sub[i + 1]) > std::abs(a[i])) {
      std::swap(a[i], sub[i + 1]);
      std::swap(b[i], a[i + 1]);
      std::swap(c[i], b[i + 1]);
      std::swap(x[i], x[i + 1]);
    }
    double pivot = a[i];
    if (pivot == 0.0) pivot = tiny;
    const double factor = sub[i + 1] / pivot;
    a[i + 1] -= factor * b[i];
    b[i + 1] -= factor * c[i];
    x[i + 1] -= factor * x[i];
  }

  for (size_t ii = n; ii-- > 0;) {
    double sum = x[ii];
    if (ii + 1 < n) sum -= b[ii] * x[ii + 1];
    if (ii + 2 < n) sum -= c[ii] * x[ii + 2];
    double pivot = a[ii];
    if (pivot == 0.0) pivot = tiny;
    x[ii] = sum / pivot;
  }
}

}  // namespace

std::vector<double> eigenvector(const std::vector<double>& diag,
                                const std::vector<double>& off,
                                double eigenvalue) {
  const size_t n = diag.size();
  std::vector<double> x(n);
  // Deterministic pseudo-random start keeps runs byte-reproducible.
  unsigned long long state = 0x9e3779b97f4a7c15ull;
  for (size_t i = 0; i < n; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    x[i] = static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
  }
  for (int iter = 0; iter < 3; ++iter) {
    shifted_tridiag_solve(diag, off, eigenvalue, x);
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : x) v /= norm;
  }
  // Fix an overall sign so results are reproducible: largest entry positive.
  size_t imax = 0;
  for (size_t i = 1; i < n; ++i)
    if (std::abs(x[i]) > std::abs(x[imax])) imax = i;
  if (x[imax] < 0.0)
    for (double& v : x) v = -v;
  return x;
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const size_t n = x_.size();
  if (n < 4 || y_.size() != n) throw std::invalid_argument("spline needs >= 4 nodes");
  for (size_t i = 0; i + 1 < n; ++i)
    if (!(x_[i + 1] > x_[i])) throw std::invalid_argument("spline nodes must increase");

  std::vector<double> h(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) h[i] = x_[i + 1] - x_[i];

  // Second-derivative system for m[1..n-2]; not-a-knot ends are eliminated into
  // the first and last interior rows, then m[0], m[n-1] are recovered.
  const size_t m = n - 2;
  std::vector<double> dl(m, 0.0), dd(m, 0.0), du(m, 0.0), rhs(m, 0.0);
  for (size_t i = 1; i + 1 < n; ++i) {
    const size_t row = i - 1;
    dl[row] = h[i - 1] / 6.0;
    dd[row] = (h[i - 1] + h[i]) / 3.0;
    du[row] = h[i] / 6.0;
    rhs[row] = (y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1];
  }
  // Left end: m0 = ((h0+h1) m1 - h0 m2) / h1.
  dd[0] += dl[0] * (h[0] + h[1]) / h[1];
  du[0] -= dl[0] * h[0] / h[1];
  dl[0] = 0.0;
  // Right end: m_{n-1} = ((h_{n-2}+h_{n-3}) m_{n-2} - h_{n-2} m_{n-3}) / h_{n-3}.
  dd[m - 1] += du[m - 1] * (h[n - 2] + h[n - 3]) / h[n - 3];
  dl[m - 1] -= du[m - 1] * h[n - 2] / h[n - 3];
  du[m - 1] = 0.0;

  // Thomas solve of the reduced tridiagonal system.
  std::vector<double> mm(n, 0.0);
  for (size_t i = 1; i < m; ++i) {
    const double w = dl[i] / dd[i - 1];
    dd[i] -= w * du[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  mm[m] = rhs[m - 1] / dd[m - 1];
  for (size_t i = m - 1; i >= 1; --i) {
    mm[i] = (rhs[i - 1] - du[i - 1] * mm[i + 1]) / dd[i - 1];
    if (i == 1) break;
  }
  mm[0] = ((h[0] + h[1]) * mm[1] - h[0] * mm[2]) / h[1];
  mm[n - 1] = ((h[n - 2] + h[n - 3]) * mm[n - 2] - h[n - 2] * mm[n - 3]) / h[n - 3];

  b_.resize(n - 1);
  c_.resize(n - 1);
  d_.resize(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) {
    b_[i] = (y_[i + 1] - y_[i]) / h[i] - h[i] * (2.0 * mm[i] + mm[i + 1]) / 6.0;
    c_[i] = mm[i] / 2.0;
    d_[i] = (mm[i + 1] - mm[i]) / (6.0 * h[i]);
  }
}

double CubicSpline::operator()(double xq) const {
  if (xq < x_.front() || xq > x_.back()) return 0.0;
  const auto it = std::upper_bound(x_.begin(), x_.end(), xq);
  size_t i = static_cast<size_t>(std::max<std::ptrdiff_t>(0, (it - x_.begin()) - 1));
  if (i >= b_.size()) i = b_.size() - 1;
  const double t = xq - x_[i];
  return y_[i] + t * (b_[i] + t * (c_[i] + t * d_[i]));
}

ComplexMatrix multiply(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  const int n = lhs.n;
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const std::complex<double> lik = lhs(i, k);
      if (lik == 0.0) continue;
      for (int j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
    }
  return out;
}

std::vector<std::complex<double>> apply(const ComplexMatrix& m,
                                        const std::vector<std::complex<double>>& v) {
  const int n = m.n;
  std::vector<std::complex<double>> out(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m(i, j) * v[j];
  return out;
}

ComplexMatrix matrix_exponential(const ComplexMatrix& m) {
  const int n = m.n;
  double norm1 = 0.0;
  for (int j = 0; j < n; ++j) {
    double col = 0.0;
    for (int i = 0; i < n; ++i) col += std::abs(m(i, j));
    norm1 = std::max(norm1, col);
  }
  int squarings = 0;
  double scale = 1.0;
  while (norm1 * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }

  ComplexMatrix scaled(n);
  for (size_t idx = 0; idx < m.a.size(); ++idx) scaled.a[idx] = m.a[idx] * scale;

  ComplexMatrix result(n), term(n);
  for (int i = 0; i < n; ++i) {
    result(i, i) = 1.0;
    term(i, i) = 1.0;
  }
  for (int k = 1; k <= 40; ++k) {
    term = multiply(term, scaled);
    for (size_t idx = 0; idx < term.a.size(); ++idx) term.a[idx] /= static_cast<double>(k);
    double tnorm = 0.0;
    for (const auto& z : term.a) tnorm = std::max(tnorm, std::abs(z));
    for (size_t idx = 0; idx < result.a.size(); ++idx) result.a[idx] += term.a[idx];
    if (tnorm < 1e-20) break;
  }
  for (int s = 0; s < squarings; ++s) result = multiply(result, result);
  return result;
}

double richardson(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("richardson needs values");
  int power = 2;
  while (values.size() > 1) {
    std::vector<double> next(values.size() - 1);
    const double factor = std::pow(2.0, power);
    for (size_t i = 0; i + 1 < values.size(); ++i)
      next[i] = (factor * values[i + 1] - values[i]) / (factor - 1.0);
    values = std::move(next);
    power += 2;
  }
  return values[0];
}

}  // namespace csdirac::numerics
