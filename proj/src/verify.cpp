#include "csdirac/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "csdirac/coherent.hpp"
#include "csdirac/geometry.hpp"
#include "csdirac/ode_oracle.hpp"
#include "csdirac/radial_states.hpp"
#include "csdirac/specfun.hpp"
#include "csdirac/spectrum.hpp"
#include "csdirac/su11.hpp"

namespace csdirac::verify {

namespace {

double lcg_uniform(std::uint64_t& state) {
  state = state * 6364136223846793005ULL + 1442695040888963407ULL;
  return static_cast<double>(state >> 11) * 0x1.0p-53;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = a + (b - a) * i / (n - 1);
  return v;
}

template <class F>
double log_trapezoid(double rmin, double rmax, int n, F&& f) {
  const double a = std::log(rmin), h = (std::log(rmax) - std::log(rmin)) / (n - 1);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = std::exp(a + i * h);
    const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    acc += w * f(r) * r;
  }
  return acc * h;
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

CheckResult gated(std::string name, double residual, double tolerance) {
  return {std::move(name), residual, tolerance, residual < tolerance, ""};
}

// Rows where passing means the value EXCEEDS the tolerance: sensitivity
// guards and documented closed-form divergences.
CheckResult detected(std::string name, double value, double threshold, std::string note) {
  return {std::move(name), value, threshold, value > threshold, std::move(note)};
}

spectrum::EnergyLevel level_at(const Scenario& sc, int n_r) {
  model::QuantumNumbers qn = sc.qn;
  qn.n_r = n_r;
  return spectrum::energy_level(sc.params, qn, +1);
}

CheckResult invalid_level_row(const std::string& name,
                              const spectrum::EnergyLevel& level) {
  std::string why = "level is not a bound state:";
  for (const auto& r : level.reasons) why += " " + r;
  return {name, 1.0, 0.0, false, why};
}

}  // namespace

CheckList check_clifford() {
  CheckList out;
  std::uint64_t rng = 0x9e3779b97f4a7c15ULL;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double rho = 0.3 + 0.7 * lcg_uniform(rng);
    const double r = 0.05 + 4.95 * lcg_uniform(rng);
    const double phi = 2.0 * M_PI * lcg_uniform(rng);
    worst = std::max(worst, geometry::clifford_residual(geometry::build_frame(rho, r, phi)));
  }
  out.push_back(gated("clifford anticommutator, 100 random frames", worst, 1e-12));

  // the connection must be the diagonal phase i(1-rho)/2 diag(1,-1,1,-1)
  const auto frame = geometry::build_frame(0.6, 1.7, 0.9);
  const std::complex<double> want(0.0, (1.0 - 0.6) / 2.0);
  double dev = 0.0;
  const double sgn[4] = {1.0, -1.0, 1.0, -1.0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const std::complex<double> expect = (i == j) ? sgn[i] * want : 0.0;
      dev = std::max(dev, std::abs(geometry::at(frame.spin_connection_phi, i, j) - expect));
    }
  out.push_back(gated("spin connection diagonal phase", dev, 1e-14));
  return out;
}

CheckList check_specfun() {
  CheckList out;
  for (double a : {0.5, 1.0, 2.5, 7.0}) {
    double worst = 0.0;
    for (int n : {1, 2, 3, 5, 10})
      worst = std::max(worst, specfun::laguerre_identity(1, n, a).relative_gap);
    out.push_back(gated("laguerre identity 1, a=" + fmt(a) + ", n up to 10", worst, 1e-9));
  }

  const auto id2 = specfun::laguerre_identity(2, 1, 2.0);
  out.push_back(gated("laguerre identity 2 convergent value (n=1, a=2)",
                      std::abs(id2.quadrature + 18.0) / 18.0, 1e-12));
  out.push_back(detected(
      "laguerre identity 2 printed form disagrees (n=1, a=2)", id2.relative_gap, 0.1,
      "the printed closed form (-48) does not match the convergent quadrature (-18); "
      "the e^{+x} reading diverges outright. The gap is expected and reported, not patched."));

  double worst = 0.0;
  for (int n : {0, 2, 5})
    for (double a : {0.7, 2.0})
      for (double x : {0.3, 2.5, 9.0}) {
        const double lag = specfun::laguerre(n, a, x);
        const double binom =
            std::exp(std::lgamma(n + a + 1.0) - std::lgamma(n + 1.0) - std::lgamma(a + 1.0));
        const double via_m = binom * specfun::kummer_m(-n, a + 1.0, x);
        worst = std::max(worst, std::abs(lag - via_m) / std::max(1.0, std::abs(lag)));
      }
  out.push_back(gated("laguerre vs confluent hypergeometric", worst, 1e-12));

  const auto rule = specfun::gauss_laguerre(24, 1.5);
  worst = 0.0;
  for (int kmom = 0; kmom <= 10; ++kmom) {
    const double got =
        specfun::integrate_weighted(rule, [&](double x) { return std::pow(x, kmom); });
    const double want = std::tgamma(1.5 + kmom + 1.0);
    worst = std::max(worst, std::abs(got - want) / want);
  }
  out.push_back(gated("quadrature moment exactness (order 24, alpha=1.5)", worst, 1e-12));
  return out;
}

std::vector<OracleRow> oracle_table(const Scenario& sc, int n_r_max) {
  std::vector<OracleRow> rows;
  for (int n_r = 0; n_r <= n_r_max; ++n_r) {
    OracleRow row;
    row.n_r = n_r;
    const auto level = level_at(sc, n_r);
    row.valid = level.valid;
    if (!level.valid) {
      for (const auto& r : level.reasons) {
        if (!row.reason.empty()) row.reason += "; ";
        row.reason += r;
      }
      rows.push_back(row);
      continue;
    }
    const auto cmp = ode_oracle::oracle_compare(level, {1999, 0.0, 3});
    row.epsilon_algebraic = cmp.epsilon_algebraic;
    row.epsilon_numeric = cmp.epsilon_numeric;
    row.relative_gap = cmp.relative_gap;
    row.eigenvector_overlap = cmp.eigenvector_overlap;
    rows.push_back(row);
  }
  return rows;
}

CheckList check_spectrum(const Scenario& sc, int n_r_max) {
  CheckList out;

  // fixed reference eigenproblems with known quantization values
  {
    ode_oracle::DiscretizationSpec ds{1999, 90.0, 3};
    const double eps = ode_oracle::fd_spectrum(0.5, 0.5, ds, 1)[0];
    out.push_back(gated("fd oracle hydrogen-like gamma=0.5",
                        std::abs(eps - 1.0 / 3.0) * 3.0, 1e-5));
  }
  {
    const double g = std::sqrt(1.25), want = 1.0 / (g + 1.0);
    ode_oracle::DiscretizationSpec ds{1999, 30.0 / want, 3};
    const double eps = ode_oracle::fd_spectrum(g, 1.0, ds, 1)[0];
    out.push_back(gated("fd oracle gamma=sqrt(1.25)", std::abs(eps - want) / want, 1e-5));
  }

  for (const auto& row : oracle_table(sc, n_r_max)) {
    const std::string tag = " n_r=" + std::to_string(row.n_r);
    if (!row.valid) {
      out.push_back({"spectrum oracle gap" + tag, 1.0, 0.0, false,
                     "level is not a bound state: " + row.reason});
      continue;
    }
    out.push_back(gated("spectrum oracle gap" + tag, row.relative_gap, 1e-5));
    out.push_back(
        gated("oracle eigenvector overlap" + tag, 1.0 - row.eigenvector_overlap, 1e-6));
  }

  const auto level0 = level_at(sc, 0);
  if (level0.valid) {
    const double fd = ode_oracle::fd_spectrum(level0.gamma + 0.1, level0.alpha,
                                              {1999, 30.0 / level0.epsilon, 2}, 1)[0];
    out.push_back(detected("detuned gamma is rejected",
                           std::abs(fd - level0.epsilon) / level0.epsilon, 1e-2,
                           "sensitivity guard: the gap must exceed the threshold once "
                           "gamma is shifted by 0.1"));

    const auto ladder = ode_oracle::fd_spectrum(level0.gamma, level0.alpha,
                                                {1999, 60.0 / level0.epsilon, 2}, 3);
    double order_viol = 0.0;
    for (size_t i = 1; i < ladder.size(); ++i)
      if (!(ladder[i] < ladder[i - 1])) order_viol = 1.0;
    out.push_back(gated("fd epsilon ladder strictly decreasing", order_viol, 0.5));
  } else {
    out.push_back(invalid_level_row("detuned gamma is rejected", level0));
  }

  const auto level2 = level_at(sc, 2);
  if (level2.valid && level2.qn.k == 0.0) {
    out.push_back({"coupled system residual, 50 radii", 1.0, 0.0, false,
                   "normalization-undefined: k = 0, no normalized state to test"});
  } else if (level2.valid) {
    const auto st = radial::make_radial_state(level2);
    const double e = level2.epsilon;
    const auto radii = linspace(0.2 / e, 12.0 / e, 50);
    double dec = 0.0, dec_lo = 0.0, cup = 0.0;
    for (double r : radii) {
      dec = std::max(dec, radial::decoupled_residual(st, r));
      dec_lo = std::max(dec_lo, radial::decoupled_residual_lower(st, r));
      const auto rows = radial::coupled_residual(st, r);
      cup = std::max(cup, std::max(rows[0], rows[1]));
    }
    out.push_back(gated("decoupled equation residual, 50 radii", dec, 1e-8));
    out.push_back(gated("decoupled lower-component residual, 50 radii", dec_lo, 1e-8));
    out.push_back(gated("coupled system residual, 50 radii", cup, 1e-8));

    double pert = 0.0;
    for (double r : radii) {
      const auto rows = radial::coupled_residual_perturbed(st, r, 1.01);
      pert = std::max(pert, std::max(rows[0], rows[1]));
    }
    out.push_back(detected("energy detuning inflates residual", pert / std::max(cup, 1e-300),
                           1e3,
                           "sensitivity guard: a 1% energy shift must raise the coupled "
                           "residual by at least the threshold factor"));
  } else {
    out.push_back(invalid_level_row("coupled system residual, 50 radii", level2));
  }

  for (int n_r = 0; n_r <= 2; ++n_r) {
    const auto level = level_at(sc, n_r);
    const std::string tag = " n_r=" + std::to_string(n_r);
    if (!level.valid) {
      out.push_back(invalid_level_row("relativistic norm" + tag, level));
      continue;
    }
    if (level.qn.k == 0.0) {
      out.push_back({"relativistic norm" + tag, 1.0, 0.0, false,
                     "normalization-undefined: k = 0"});
      continue;
    }
    const auto st = radial::make_radial_state(level);
    const double lam2p1 = st.derived.lambda_sq_plus_one.value();
    const double norm =
        log_trapezoid(1e-7, 300.0 / level.epsilon, 20001, [&](double r) {
          const double fp = st.F_plus(r), gm = st.G_minus(r);
          return lam2p1 * r * (fp * fp + gm * gm);
        });
    out.push_back(gated("relativistic norm" + tag, std::abs(norm - 1.0), 1e-8));
    out.push_back(
        gated("printed normalization constant gap" + tag, st.normalization_gap, 1e-10));
  }

  {
    const double up =
        radial::upper_component_norm(1.3, 3, 1.0) / radial::upper_component_norm(1.3, 3, 2.0);
    const double lo =
        radial::lower_component_norm(1.3, 3, 1.0) / radial::lower_component_norm(1.3, 3, 2.0);
    out.push_back(
        gated("upper component norm scales as epsilon^-4", std::abs(up / 16.0 - 1.0), 1e-13));
    out.push_back(
        gated("lower component norm scales as epsilon^-4", std::abs(lo / 16.0 - 1.0), 1e-13));
  }

  {
    const auto gs = radial::ground_states(sc.params, sc.qn);
    out.push_back(
        gated("ground state pointwise ratio deviation", gs.max_ratio_deviation, 1e-12));
    out.push_back(gated("lowering operator annihilates ground state",
                        gs.susy_annihilation_residual, 1e-10));
    out.push_back({"second lowering-operator kernel is non-normalizable",
                   gs.rejected_candidate_diverges ? 0.0 : 1.0, 0.5,
                   gs.rejected_candidate_diverges,
                   "the norm integrand of r^{-gamma} e^{+alpha r / gamma} must blow up"});
  }
  return out;
}

CheckList check_su11(const Scenario& sc, int grid_points) {
  CheckList out;
  const auto level0 = level_at(sc, 0);
  if (!(level0.alpha > 0.0)) {
    out.push_back(invalid_level_row("su(1,1) algebra checks", level0));
    return out;
  }
  su11::GeneratorContext tilt{level0.gamma, level0.epsilon, level0.alpha,
                              su11::Realization::tilting};
  su11::GeneratorContext schr{level0.gamma, level0.epsilon, level0.alpha,
                              su11::Realization::schrodinger};
  const int pts = grid_points;
  for (const auto& rows :
       {su11::algebra_check(tilt, su11::AlgebraCheck::commutators, pts),
        su11::algebra_check(schr, su11::AlgebraCheck::commutators, pts),
        su11::algebra_check(schr, su11::AlgebraCheck::casimir, pts),
        su11::algebra_check(schr, su11::AlgebraCheck::factorization, pts),
        su11::algebra_check(tilt, su11::AlgebraCheck::tilting_scaling, pts),
        su11::algebra_check(tilt, su11::AlgebraCheck::ladder, pts),
        su11::algebra_check(tilt, su11::AlgebraCheck::displacement_normal_form, pts)})
    out.insert(out.end(), rows.begin(), rows.end());
  return out;
}

CheckList check_coherent(const Scenario& sc) {
  CheckList out;
  coherent::CoherentParams cp{0.0, sc.params, sc.qn, 200};
  const auto level0 = coherent::anchor_level(cp);
  if (!level0.valid) {
    out.push_back(invalid_level_row("coherent family", level0));
    return out;
  }

  const auto radii = linspace(0.1, 10.0, 25);
  for (double xi : {0.1, 0.3, 0.5}) {
    cp.xi = xi;
    double worst_f = 0.0, worst_g = 0.0;
    for (double r : radii) {
      const auto ser = coherent::coherent_radial(cp, coherent::Mode::series, r);
      const auto clo = coherent::coherent_radial(cp, coherent::Mode::closed, r);
      worst_f = std::max(worst_f,
                         std::abs(ser.F_coh - clo.F_coh) / std::abs(clo.F_coh));
      worst_g = std::max(worst_g,
                         std::abs(ser.G_coh - clo.G_coh) / std::abs(clo.G_coh));
    }
    out.push_back(
        gated("coherent upper series vs closed, xi=" + fmt(xi), worst_f, 1e-10));
    out.push_back(
        gated("coherent lower series vs closed, xi=" + fmt(xi), worst_g, 1e-10));
  }

  {
    cp.xi = 0.5;
    const double g = level0.gamma, e = level0.epsilon;
    const double r1 = 1.0, r2 = 2.0;
    const double f1 =
        coherent::coherent_radial(cp, coherent::Mode::closed, r1).F_coh.real();
    const double f2 =
        coherent::coherent_radial(cp, coherent::Mode::closed, r2).F_coh.real();
    const double beta_measured =
        (std::log(f1) - std::log(f2) + (g + 1.0) * (std::log(r2) - std::log(r1))) / (r2 - r1);
    out.push_back(gated("closed-form decay rate equals 3 epsilon at xi=0.5",
                        std::abs(beta_measured - 3.0 * e) / (3.0 * e), 1e-10));
  }

  if (level0.qn.k != 0.0) {
    const auto st0 = radial::make_radial_state(level0);
    cp.xi = 0.0;
    double spread = 0.0;
    const double ref =
        coherent::coherent_radial(cp, coherent::Mode::closed, radii[0]).F_coh.real() /
        st0.F(radii[0]);
    for (double r : radii) {
      const double ratio =
          coherent::coherent_radial(cp, coherent::Mode::closed, r).F_coh.real() / st0.F(r);
      spread = std::max(spread, std::abs(ratio / ref - 1.0));
    }
    out.push_back(gated("xi=0 upper profile reduces to the lowest eigenstate", spread, 1e-12));

    const auto d0 = spectrum::level_derived(level0);
    cp.xi = 0.3;
    const double d_ratio = coherent::coherent_spinor(cp, 1.0).D_ratio;
    const double target = (2.0 * level0.gamma + 1.0) / d0.eta;
    double worst = 0.0;
    for (double r : {0.5, 2.0, 7.0}) {
      const auto pair = coherent::coherent_radial(cp, coherent::Mode::closed, r);
      const double val = d_ratio * r * pair.G_coh.real() / pair.F_coh.real();
      worst = std::max(worst, std::abs(val - target) / std::abs(target));
    }
    out.push_back(gated("lower/upper coefficient ratio matches (2 gamma + 1)/eta", worst,
                        1e-12));

    // normalization on a discretization independent of the defining quadrature
    cp.xi = 0.3;
    const double beta = level0.epsilon * 1.3 / 0.7;
    const double lam2p1 = d0.lambda_sq_plus_one.value();
    const double norm = log_trapezoid(1e-7, 300.0 / beta, 20001, [&](double r) {
      const auto sp = coherent::coherent_spinor(cp, r);
      return lam2p1 * r * (sp.F_plus_coh * sp.F_plus_coh + sp.G_minus_coh * sp.G_minus_coh);
    });
    out.push_back(gated("coherent spinor relativistic norm, xi=0.3",
                        std::abs(norm - 1.0), 1e-8));
    out.push_back(gated("printed coherent normalization gap, xi=0.3",
                        coherent::coherent_spinor(cp, 1.0).relative_gap, 1e-10));

    // documented divergence: the displaced pair does not solve the coupled
    // system row-by-row (only the r^gamma coefficients cancel)
    {
      cp.xi = 0.3;
      const double gam = level0.gamma, alp = level0.alpha;
      const double eta = d0.eta, nu = d0.nu;
      double res = 0.0;
      for (double r : {0.5, 1.0, 2.0, 5.0}) {
        const auto pair = coherent::coherent_radial(cp, coherent::Mode::closed, r);
        const double F = pair.F_coh.real(), G = d_ratio * pair.G_coh.real();
        const double dF = F * ((gam + 1.0) / r - beta);
        const double dG = G * (gam / r - beta);
        const double row1 = dF + gam / r * F - alp / gam * F - eta * G;
        const double row2 = (2.0 * nu - eta) * F - dG + gam / r * G - alp / gam * G;
        const double s1 = std::abs(dF) + std::abs(gam / r * F) + std::abs(alp / gam * F) +
                          std::abs(eta * G);
        const double s2 = std::abs((2.0 * nu - eta) * F) + std::abs(dG) +
                          std::abs(gam / r * G) + std::abs(alp / gam * G);
        res = std::max(res, std::max(std::abs(row1) / s1, std::abs(row2) / s2));
      }
      out.push_back(detected(
          "displaced pair coupled-system claim fails as printed", res, 1e-3,
          "the stated substitution property does not hold: the series for the lower "
          "profile starts one index below the eigenstate tower, so the first-order "
          "system is violated at order r^{gamma+1}. Detection is the expected result."));
    }
    {
      cp.xi = 0.0;
      double spread_sp = 0.0;
      const double ref_sp =
          coherent::coherent_spinor(cp, radii[0]).F_plus_coh / st0.F_plus(radii[0]);
      for (double r : radii) {
        const double ratio = coherent::coherent_spinor(cp, r).F_plus_coh / st0.F_plus(r);
        spread_sp = std::max(spread_sp, std::abs(ratio / ref_sp - 1.0));
      }
      out.push_back(detected(
          "xi=0 spinor reduction claim fails as printed", spread_sp, 1e-3,
          "the matricial closed form omits the epsilon-order mixing term in the upper "
          "entry, so at xi=0 it is not proportional to the eigen-spinor. Detection is "
          "the expected result."));
    }
  } else {
    out.push_back({"coherent spinor checks", 1.0, 0.0, false,
                   "normalization-undefined: k = 0"});
  }

  {
    const auto c = coherent::perelomov_fock(1.0, 0.5, 100);
    double sum = 0.0;
    for (const auto& cs : c) sum += std::norm(cs);
    out.push_back(gated("weight normalization k=1, xi=0.5, N=100", std::abs(sum - 1.0),
                        1e-12));
    out.push_back(gated("lowest weight coefficient k=1, xi=0.5",
                        std::abs(c[0].real() - 0.75), 1e-14));
  }
  {
    const auto c = coherent::perelomov_fock(level0.gamma + 1.0, std::polar(0.5, 0.7), 100);
    double sum = 0.0;
    for (const auto& cs : c) sum += std::norm(cs);
    out.push_back(gated("weight normalization k=gamma+1, complex xi, N=100",
                        std::abs(sum - 1.0), 1e-12));
  }
  {
    const auto c = coherent::perelomov_fock(1.7, 0.0, 10);
    double dev = std::abs(c[0] - 1.0);
    for (size_t s = 1; s < c.size(); ++s) dev = std::max(dev, std::abs(c[s]));
    out.push_back(gated("xi=0 weights collapse to the lowest state", dev, 1e-15));
  }
  return out;
}

CheckList check_all(const Scenario& sc) {
  CheckList out = check_clifford();
  const CheckList parts[] = {check_specfun(), check_spectrum(sc), check_su11(sc),
                             check_coherent(sc)};
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

bool all_pass(const CheckList& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const CheckResult& r) { return r.pass; });
}

}  // namespace csdirac::verify
