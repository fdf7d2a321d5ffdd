#include "csdirac/coherent.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "csdirac/specfun.hpp"

namespace csdirac::coherent {

namespace {

// Spinor evaluation is called once per radius; reuse the nodes for repeated
// alphas instead of re-running the Newton solve every call.
const specfun::QuadratureRule& cached_rule(double alpha) {
  static std::mutex mu;
  static std::map<long long, specfun::QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  const long long key = std::llround(alpha * 1e12);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, specfun::gauss_laguerre(96, alpha)).first;
  return it->second;
}

void validate(const CoherentParams& cp) {
  if (!(std::abs(cp.xi) < 1.0))
    throw std::invalid_argument("coherent parameter |xi| must be below 1");
  if (cp.truncation_N < 1)
    throw std::invalid_argument("series truncation must be at least 1");
}

double require_real_xi(const CoherentParams& cp) {
  if (cp.xi.imag() != 0.0 || cp.xi.real() < 0.0)
    throw std::domain_error(
        "unsupported-branch: the resummed closed form is only defined for real xi in [0, 1)");
  return cp.xi.real();
}

struct Anchor {
  spectrum::EnergyLevel level;
  double gamma = 0.0;
  double epsilon = 0.0;
};

Anchor radial_anchor(const CoherentParams& cp) {
  Anchor a;
  a.level = anchor_level(cp);
  if (!(a.level.alpha > 0.0))
    throw std::domain_error("nonpositive-coupling: no bound family to displace");
  a.gamma = a.level.gamma;
  a.epsilon = a.level.epsilon;
  return a;
}

// Shared prefactors of the upper and lower profiles: the Perelomov weights
// telescope against the basis normalization, leaving plain xi^s sums.
double upper_front(double gamma, double xi_norm_sq) {
  return 2.0 * std::pow(1.0 - xi_norm_sq, gamma + 1.0) /
         std::sqrt(std::tgamma(2.0 * gamma + 2.0));
}

double lower_front(double gamma, double xi_norm_sq) {
  return 2.0 * std::pow(1.0 - xi_norm_sq, gamma) / std::sqrt(std::tgamma(2.0 * gamma));
}

}  // namespace

spectrum::EnergyLevel anchor_level(const CoherentParams& cp) {
  model::QuantumNumbers qn = cp.qn;
  qn.n_r = 0;
  return spectrum::energy_level(cp.params, qn, +1);
}

RadialPair coherent_radial(const CoherentParams& cp, Mode mode, double r) {
  validate(cp);
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
  const Anchor a = radial_anchor(cp);
  const double g = a.gamma, e = a.epsilon;
  const double xn2 = std::norm(cp.xi);
  const double scale_up = upper_front(g, xn2) * (e * r) * std::pow(2.0 * e * r, g);
  const double scale_lo = lower_front(g, xn2) * (e * r) * std::pow(2.0 * e * r, g - 1.0);

  if (mode == Mode::closed) {
    const double xi = require_real_xi(cp);
    const double beta = e * (1.0 + xi) / (1.0 - xi);
    const double decay = std::exp(-beta * r);
    return {scale_up * decay / std::pow(1.0 - xi, 2.0 * g + 2.0),
            scale_lo * decay / std::pow(1.0 - xi, 2.0 * g)};
  }

  const double x = 2.0 * e * r;
  const double decay = std::exp(-e * r);
  const std::complex<double> sum_up =
      specfun::laguerre_geometric_sum(2.0 * g + 1.0, x, cp.xi, cp.truncation_N);
  const std::complex<double> sum_lo =
      specfun::laguerre_geometric_sum(2.0 * g - 1.0, x, cp.xi, cp.truncation_N);
  return {scale_up * decay * sum_up, scale_lo * decay * sum_lo};
}

SpinorSample coherent_spinor(const CoherentParams& cp, double r) {
  validate(cp);
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
  const double xi = require_real_xi(cp);

  const auto level = anchor_level(cp);
  if (!level.valid) {
    std::string why = "coherent spinor needs a valid anchor level:";
    for (const auto& reason : level.reasons) why += " " + reason;
    throw std::invalid_argument(why);
  }
  if (level.qn.k == 0.0)
    throw std::domain_error(
        "normalization-undefined: k = 0 leaves the norm weight 1 + lambda^2 unset");

  const auto d = spectrum::level_derived(level);
  const double g = level.gamma, e = level.epsilon;
  const double rho = level.params.rho, j = level.qn.j, s1 = level.params.s1;
  const double eta = d.eta, lam2p1 = d.lambda_sq_plus_one.value();

  const double beta = e * (1.0 + xi) / (1.0 - xi);
  const double front = upper_front(g, xi * xi) * std::pow(2.0 * e, g) /
                       std::pow(1.0 - xi, 2.0 * g + 2.0);
  // linear-in-r entry coefficients of the matricial closed form
  const double p = (g * rho - j) / rho, q = -s1 * (2.0 * g + 1.0) / eta;
  const double u = s1, v = (2.0 * g + 1.0) * (g * rho - j) / (eta * rho);

  const auto& rule = cached_rule(2.0 * g + 1.0);
  const double norm_unit =
      lam2p1 * front * front / std::pow(2.0 * beta, 2.0 * g + 2.0) *
      specfun::integrate_weighted(rule, [&](double x) {
        const double rr = x / (2.0 * beta);
        const double up = p * rr + q, lo = u * rr + v;
        return up * up + lo * lo;
      });

  SpinorSample out;
  out.C_n_quadrature = 1.0 / std::sqrt(norm_unit);

  const double sig_p = (2.0 * g + 1.0) * (2.0 * g + 1.0) /
                       (eta * eta * std::pow(1.0 - xi * xi, 2.0));
  const double theta_p =
      (2.0 * g + 3.0) * (2.0 * g + 2.0) / (4.0 * e * e * std::pow(1.0 + xi, 4.0));
  out.C_n_reference =
      std::sqrt(rho * e * e * std::pow(1.0 - xi * xi, 2.0 * g) /
                (lam2p1 * 2.0 * g * (g * rho - j) *
                 std::pow(1.0 - std::abs(xi) * std::abs(xi), 2.0 * g + 2.0) *
                 (sig_p + theta_p)));
  out.relative_gap = std::abs(out.C_n_quadrature - out.C_n_reference) / out.C_n_quadrature;

  out.D_ratio = 2.0 * e * (1.0 - xi * xi) * (2.0 * g + 1.0) /
                (std::pow(1.0 - xi, 2.0) * eta) *
                std::exp(0.5 * (std::lgamma(2.0 * g) - std::lgamma(2.0 * g + 2.0)));

  const double shape = out.C_n_quadrature * front * std::pow(r, g) * std::exp(-beta * r);
  out.F_plus_coh = shape * (p * r + q);
  out.G_minus_coh = shape * (u * r + v);
  return out;
}

std::vector<std::complex<double>> perelomov_fock(double k, std::complex<double> xi, int N) {
  if (!(k > 0.0)) throw std::invalid_argument("Bargmann index must be positive");
  if (N < 1) throw std::invalid_argument("truncation must be at least 1");
  if (!(std::abs(xi) < 1.0)) throw std::invalid_argument("|xi| must be below 1");
  std::vector<std::complex<double>> c(static_cast<size_t>(N) + 1);
  const double front = std::pow(1.0 - std::norm(xi), k);
  std::complex<double> xi_pow = 1.0;
  for (int s = 0; s <= N; ++s) {
    const double mag = std::exp(
        0.5 * (std::lgamma(s + 2.0 * k) - std::lgamma(s + 1.0) - std::lgamma(2.0 * k)));
    c[static_cast<size_t>(s)] = front * mag * xi_pow;
    xi_pow *= xi;
  }
  return c;
}

}  // namespace csdirac::coherent
