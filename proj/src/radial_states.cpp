#include "csdirac/radial_states.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "csdirac/specfun.hpp"

namespace csdirac::radial {

namespace {

constexpr double kTiny = 1e-300;

int quadrature_order(int n) { return std::min(180, std::max(96, 2 * n + 32)); }

std::vector<double> log_spaced(double lo, double hi, int points) {
  std::vector<double> r(static_cast<size_t>(points));
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < points; ++i)
    r[static_cast<size_t>(i)] = std::exp(a + (b - a) * i / (points - 1));
  return r;
}

}  // namespace

double sturmian(int n, double gamma, double r, SturmianComponent component) {
  if (!(gamma > 0.0) || !(r > 0.0))
    throw std::invalid_argument("sturmian requires gamma > 0 and r > 0");
  if (component == SturmianComponent::upper) {
    if (n < 1) throw std::invalid_argument("upper sturmian index starts at 1");
    const double c = 2.0 * std::exp(0.5 * (std::lgamma(n) - std::lgamma(n + 2.0 * gamma + 1.0)));
    return c * std::pow(2.0 * r, gamma) * std::exp(-r) *
           specfun::laguerre(n - 1, 2.0 * gamma + 1.0, 2.0 * r);
  }
  if (n < 0) throw std::invalid_argument("lower sturmian index starts at 0");
  const double c = 2.0 * std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + 2.0 * gamma)));
  return c * std::pow(2.0 * r, gamma - 1.0) * std::exp(-r) *
         specfun::laguerre(n, 2.0 * gamma - 1.0, 2.0 * r);
}

double RadialState::F(double r) const {
  const double g = level.gamma, e = level.epsilon;
  return A_quadrature * std::pow(2.0 * e, g) * std::pow(r, g + 1.0) * std::exp(-e * r) *
         specfun::laguerre(n - 1, 2.0 * g + 1.0, 2.0 * e * r);
}

double RadialState::dF(double r) const {
  const double g = level.gamma, e = level.epsilon, x = 2.0 * e * r;
  const double l = specfun::laguerre(n - 1, 2.0 * g + 1.0, x);
  const double lp = -specfun::laguerre(n - 2, 2.0 * g + 2.0, x);
  return A_quadrature * std::pow(2.0 * e, g) * std::exp(-e * r) *
         ((g + 1.0) * std::pow(r, g) * l - e * std::pow(r, g + 1.0) * l +
          2.0 * e * std::pow(r, g + 1.0) * lp);
}

double RadialState::d2F(double r) const {
  const double g = level.gamma, e = level.epsilon, x = 2.0 * e * r;
  const double l = specfun::laguerre(n - 1, 2.0 * g + 1.0, x);
  const double lp = -specfun::laguerre(n - 2, 2.0 * g + 2.0, x);
  const double lpp = specfun::laguerre(n - 3, 2.0 * g + 3.0, x);
  const double cl = g * (g + 1.0) * std::pow(r, g - 1.0) -
                    2.0 * e * (g + 1.0) * std::pow(r, g) + e * e * std::pow(r, g + 1.0);
  const double clp = 2.0 * e * (2.0 * (g + 1.0) * std::pow(r, g) - 2.0 * e * std::pow(r, g + 1.0));
  const double clpp = 4.0 * e * e * std::pow(r, g + 1.0);
  return A_quadrature * std::pow(2.0 * e, g) * std::exp(-e * r) * (cl * l + clp * lp + clpp * lpp);
}

double RadialState::G(double r) const {
  const double g = level.gamma, e = level.epsilon;
  return A_quadrature * B_over_A * std::pow(2.0 * e, g - 1.0) * std::pow(r, g) *
         std::exp(-e * r) * specfun::laguerre(n, 2.0 * g - 1.0, 2.0 * e * r);
}

double RadialState::dG(double r) const {
  const double g = level.gamma, e = level.epsilon, x = 2.0 * e * r;
  const double m = specfun::laguerre(n, 2.0 * g - 1.0, x);
  const double mp = -specfun::laguerre(n - 1, 2.0 * g, x);
  return A_quadrature * B_over_A * std::pow(2.0 * e, g - 1.0) * std::exp(-e * r) *
         (g * std::pow(r, g - 1.0) * m - e * std::pow(r, g) * m + 2.0 * e * std::pow(r, g) * mp);
}

double RadialState::d2G(double r) const {
  const double g = level.gamma, e = level.epsilon, x = 2.0 * e * r;
  const double m = specfun::laguerre(n, 2.0 * g - 1.0, x);
  const double mp = -specfun::laguerre(n - 1, 2.0 * g, x);
  const double mpp = specfun::laguerre(n - 2, 2.0 * g + 1.0, x);
  const double cm = g * (g - 1.0) * std::pow(r, g - 2.0) - 2.0 * e * g * std::pow(r, g - 1.0) +
                    e * e * std::pow(r, g);
  const double cmp = 2.0 * e * (2.0 * g * std::pow(r, g - 1.0) - 2.0 * e * std::pow(r, g));
  const double cmpp = 4.0 * e * e * std::pow(r, g);
  return A_quadrature * B_over_A * std::pow(2.0 * e, g - 1.0) * std::exp(-e * r) *
         (cm * m + cmp * mp + cmpp * mpp);
}

double RadialState::F_plus(double r) const {
  const double g = level.gamma, e = level.epsilon, x = 2.0 * e * r;
  const double lu = specfun::laguerre(n - 1, 2.0 * g + 1.0, x);
  const double ll = specfun::laguerre(n, 2.0 * g - 1.0, x);
  return A_quadrature * std::pow(2.0 * e, g) * std::pow(r, g) * std::exp(-e * r) *
         (R1 * r * lu - R2 * ll);
}

double RadialState::G_minus(double r) const {
  const double g = level.gamma, e = level.epsilon, x = 2.0 * e * r;
  const double lu = specfun::laguerre(n - 1, 2.0 * g + 1.0, x);
  const double ll = specfun::laguerre(n, 2.0 * g - 1.0, x);
  return A_quadrature * std::pow(2.0 * e, g) * std::pow(r, g) * std::exp(-e * r) *
         (T1 * r * lu + T2 * ll);
}

RadialState make_radial_state(const spectrum::EnergyLevel& level) {
  if (!level.valid)
    throw std::invalid_argument("radial state requires a valid bound-state level");
  if (level.qn.k == 0.0)
    throw std::domain_error(
        "normalization-undefined: k = 0 leaves the norm weight 1 + lambda^2 unset");

  RadialState st;
  st.level = level;
  st.derived = spectrum::level_derived(level);
  st.n = level.qn.n_r + 1;

  const double g = level.gamma, e = level.epsilon;
  const double rho = level.params.rho, j = level.qn.j, s1 = level.params.s1;
  const double eta = st.derived.eta;
  st.B_over_A = st.n * (st.n + 2.0 * g) * e / (g * eta);
  st.R1 = (g * rho - j) / rho;
  st.T1 = s1;
  const double c = st.n * (st.n + 2.0 * g) / (2.0 * g * eta);
  st.R2 = c * s1;
  st.T2 = c * (g * rho - j) / rho;

  // Norm with unit coefficient: substituting x = 2 epsilon r turns
  // (1+lambda^2) r (F+^2 + G-^2) dr into a polynomial against x^{2g+1} e^{-x},
  // which the matched rule integrates exactly.
  const double lam2p1 = st.derived.lambda_sq_plus_one.value();
  const auto rule = specfun::gauss_laguerre(quadrature_order(st.n), 2.0 * g + 1.0);
  const double r1 = st.R1, r2 = st.R2, t1 = st.T1, t2 = st.T2;
  const int nn = st.n;
  const double norm_unit =
      lam2p1 / (4.0 * e * e) *
      specfun::integrate_weighted(rule, [&](double x) {
        const double lu = specfun::laguerre(nn - 1, 2.0 * g + 1.0, x);
        const double ll = specfun::laguerre(nn, 2.0 * g - 1.0, x);
        const double rr = x / (2.0 * e);
        const double up = r1 * rr * lu - r2 * ll;
        const double lo = t1 * rr * lu + t2 * ll;
        return up * up + lo * lo;
      });
  st.A_quadrature = 1.0 / std::sqrt(norm_unit);

  const double theta = 3.0 * nn * nn + g * (6.0 * nn + 2.0 * g - 1.0);
  const double sigma = nn * (nn + 2.0 * g) / (g * eta * g * eta);
  st.A_closed_form =
      2.0 * e * e *
      std::sqrt(rho * std::exp(std::lgamma(nn) - std::lgamma(nn + 2.0 * g + 1.0)) /
                (lam2p1 * g * (g * rho - j) * (theta + e * e * sigma * (theta + 2.0 * g))));
  st.normalization_gap = std::abs(st.A_quadrature - st.A_closed_form) / st.A_quadrature;
  return st;
}

SpinorSample radial_spinor(const RadialState& state, double r) {
  return {state.F(r), state.G(r), state.F_plus(r), state.G_minus(r)};
}

namespace {

std::array<double, 2> coupled_rows(const RadialState& st, double r, double eta) {
  const double g = st.level.gamma, alp = st.level.alpha, nu = st.derived.nu;
  const double F = st.F(r), G = st.G(r), dF = st.dF(r), dG = st.dG(r);
  const double row1 = dF + (g / r) * F - (alp / g) * F - eta * G;
  const double row2 = (2.0 * nu - eta) * F - dG + (g / r) * G - (alp / g) * G;
  const double s1 = std::abs(dF) + std::abs(g / r * F) + std::abs(alp / g * F) +
                    std::abs(eta * G) + kTiny;
  const double s2 = std::abs((2.0 * nu - eta) * F) + std::abs(dG) + std::abs(g / r * G) +
                    std::abs(alp / g * G) + kTiny;
  return {std::abs(row1) / s1, std::abs(row2) / s2};
}

}  // namespace

std::array<double, 2> coupled_residual(const RadialState& state, double r) {
  return coupled_rows(state, r, state.derived.eta);
}

std::array<double, 2> coupled_residual_perturbed(const RadialState& state, double r,
                                                 double energy_scale) {
  const double E = energy_scale * state.level.E, k = state.level.qn.k;
  if (E * E < k * k)
    throw std::domain_error("perturbed energy fell below the longitudinal momentum");
  const double eta = state.level.qn.s * std::sqrt(E * E - k * k) + state.derived.nu;
  return coupled_rows(state, r, eta);
}

double decoupled_residual(const RadialState& state, double r) {
  const double g = state.level.gamma, alp = state.level.alpha, e = state.level.epsilon;
  const double F = state.F(r), d2F = state.d2F(r);
  const double res = -d2F + g * (g + 1.0) / (r * r) * F - 2.0 * alp / r * F + e * e * F;
  const double scale = std::abs(d2F) + std::abs(g * (g + 1.0) / (r * r) * F) +
                       std::abs(2.0 * alp / r * F) + std::abs(e * e * F) + kTiny;
  return std::abs(res) / scale;
}

double decoupled_residual_lower(const RadialState& state, double r) {
  const double g = state.level.gamma, alp = state.level.alpha, e = state.level.epsilon;
  const double G = state.G(r), d2G = state.d2G(r);
  const double res = -d2G + (g - 1.0) * g / (r * r) * G - 2.0 * alp / r * G + e * e * G;
  const double scale = std::abs(d2G) + std::abs((g - 1.0) * g / (r * r) * G) +
                       std::abs(2.0 * alp / r * G) + std::abs(e * e * G) + kTiny;
  return std::abs(res) / scale;
}

NormalizationReport normalize(const spectrum::EnergyLevel& level) {
  const RadialState st = make_radial_state(level);
  return {st.A_quadrature, st.A_closed_form, st.A_quadrature * st.B_over_A,
          st.normalization_gap};
}

double upper_component_norm(double gamma, int n, double epsilon) {
  const auto rule = specfun::gauss_laguerre(quadrature_order(n), 2.0 * gamma + 3.0);
  const double base = specfun::integrate_weighted(rule, [&](double x) {
    const double l = specfun::laguerre(n - 1, 2.0 * gamma + 1.0, x);
    return l * l;
  });
  return base / (16.0 * epsilon * epsilon * epsilon * epsilon);
}

double lower_component_norm(double gamma, int n, double epsilon) {
  const auto rule = specfun::gauss_laguerre(quadrature_order(n), 2.0 * gamma + 1.0);
  const double base = specfun::integrate_weighted(rule, [&](double x) {
    const double l = specfun::laguerre(n, 2.0 * gamma - 1.0, x);
    return l * l;
  });
  return base / (16.0 * epsilon * epsilon * epsilon * epsilon);
}

GroundStateReport ground_states(const model::ModelParams& params,
                                const model::QuantumNumbers& qn) {
  const auto level = spectrum::energy_level(params, qn, +1);
  const double g = level.gamma, alp = level.alpha;
  if (!(alp > 0.0))
    throw std::domain_error("no-bound-state: alpha <= 0 admits no normalizable ground state");
  const double kappa = alp / g;

  GroundStateReport rep;
  rep.radii = log_spaced(0.01, 20.0, 200);
  rep.schrodinger.reserve(rep.radii.size());
  rep.susy.reserve(rep.radii.size());
  for (double r : rep.radii) {
    rep.schrodinger.push_back(std::pow(2.0 * kappa, g - 1.0) * std::pow(r, g) *
                              std::exp(-kappa * r) *
                              specfun::laguerre(0, 2.0 * g - 1.0, 2.0 * kappa * r));
    rep.susy.push_back(std::pow(r, g) * std::exp(-kappa * r));
  }

  const double ratio0 = rep.schrodinger.front() / rep.susy.front();
  double dev = 0.0;
  for (size_t i = 0; i < rep.radii.size(); ++i)
    dev = std::max(dev, std::abs(rep.schrodinger[i] / rep.susy[i] / ratio0 - 1.0));
  rep.max_ratio_deviation = dev;

  // Lowering-operator residual with a complex-step derivative, so the
  // derivative is independent of the sampled closed form to machine accuracy.
  const double h = 1e-20;
  double worst = 0.0;
  for (double r : rep.radii) {
    const std::complex<double> z(r, h);
    const std::complex<double> phi = std::exp(g * std::log(z) - kappa * z);
    const double dphi = phi.imag() / h;
    const double val = std::exp(g * std::log(r) - kappa * r);
    const double res = -dphi + (g / r) * val - kappa * val;
    const double scale = std::abs(dphi) + (g / r + kappa) * std::abs(val) + kTiny;
    worst = std::max(worst, std::abs(res) / scale);
  }
  rep.susy_annihilation_residual = worst;

  // The other lowering-operator kernel, r^{-gamma} e^{+kappa r}: its norm
  // integrand r^{1-2 gamma} e^{2 kappa r} must blow up along a dyadic ladder.
  std::vector<double> logw;
  for (double r : {5.0, 10.0, 20.0, 40.0})
    logw.push_back((1.0 - 2.0 * g) * std::log(r) + 2.0 * kappa * r);
  bool rising = true;
  for (size_t i = 1; i < logw.size(); ++i) rising = rising && logw[i] > logw[i - 1];
  rep.rejected_candidate_diverges = rising && (logw.back() - logw.front() > std::log(1e3));
  return rep;
}

std::array<std::complex<double>, 4> full_spinor(const RadialState& state, double t,
                                                double r, double phi, double z) {
  const double k = state.level.qn.k;
  if (k == 0.0)
    throw std::domain_error(
        "discrete-symmetry-undefined: k = 0 leaves the component ratio lambda unset");
  const std::complex<double> I(0.0, 1.0);
  const double lam = state.derived.k_lambda / k;
  const std::complex<double> pref =
      std::exp(I * (-state.level.E * t + static_cast<double>(state.level.qn.m) * phi + k * z)) /
      std::sqrt(r);
  const std::complex<double> eip = std::exp(I * phi);
  const double fp = state.F_plus(r), gm = state.G_minus(r);
  return {pref * fp, pref * (-I) * lam * gm * eip, pref * lam * fp, pref * I * gm * eip};
}

std::vector<double> default_radii(const RadialState& state, int points) {
  return log_spaced(1e-4, 30.0 / state.level.epsilon, points);
}

}  // namespace csdirac::radial
