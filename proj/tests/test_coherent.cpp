#include <cmath>
#include <complex>
#include <stdexcept>

#include "csdirac/coherent.hpp"
#include "csdirac/radial_states.hpp"
#include "csdirac/spectrum.hpp"
#include "doctest.h"

using namespace csdirac;

namespace {

coherent::CoherentParams std_params(std::complex<double> xi, int N = 200) {
  const model::ModelParams params{1.0, 2.0, 0.75, 0.8, 0.3};
  const auto qn = model::make_quantum_numbers(1, 0.6, +1, 0);
  return {xi, params, qn, N};
}

}  // namespace

TEST_SUITE("coherent") {
  TEST_CASE("weight coefficients are normalized and recursive") {
    const auto c = coherent::perelomov_fock(1.0, 0.5, 100);
    REQUIRE(c.size() == 101);
    CHECK(std::abs(c[0].real() - 0.75) < 1e-15);  // (1 - 1/4)^1
    double sum = 0.0;
    for (const auto& z : c) sum += std::norm(z);
    CHECK(std::abs(sum - 1.0) < 1e-12);
    // c_{s+1}/c_s = xi sqrt((s + 2k)/(s + 1))
    const double k = 1.0, xi = 0.5;
    for (int s : {0, 3, 9}) {
      const double want = xi * std::sqrt((s + 2.0 * k) / (s + 1.0));
      CHECK(std::abs(c[s + 1] / c[s] - want) < 1e-14);
    }
  }

  TEST_CASE("complex displacement keeps the weights normalized") {
    const auto c = coherent::perelomov_fock(3.15, std::polar(0.5, 0.7), 100);
    double sum = 0.0;
    for (const auto& z : c) sum += std::norm(z);
    CHECK(std::abs(sum - 1.0) < 1e-12);
    CHECK(std::abs(std::arg(c[3]) - 3 * 0.7) < 1e-13);
  }

  TEST_CASE("zero displacement collapses onto the lowest state") {
    const auto c = coherent::perelomov_fock(1.7, 0.0, 10);
    CHECK(std::abs(c[0] - 1.0) < 1e-15);
    for (size_t s = 1; s < c.size(); ++s) CHECK(std::abs(c[s]) == 0.0);
  }

  TEST_CASE("weight construction validates its arguments") {
    CHECK_THROWS_AS(coherent::perelomov_fock(0.0, 0.3, 10), std::invalid_argument);
    CHECK_THROWS_AS(coherent::perelomov_fock(1.0, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(coherent::perelomov_fock(1.0, 0.3, 0), std::invalid_argument);
  }

  TEST_CASE("series resummation matches the closed exponential form") {
    for (double xi : {0.1, 0.45}) {
      const auto cp = std_params(xi);
      for (double r : {0.5, 2.0, 6.0}) {
        const auto ser = coherent::coherent_radial(cp, coherent::Mode::series, r);
        const auto clo = coherent::coherent_radial(cp, coherent::Mode::closed, r);
        INFO("xi=", xi, " r=", r);
        CHECK(std::abs(ser.F_coh - clo.F_coh) <= 1e-10 * std::abs(clo.F_coh));
        CHECK(std::abs(ser.G_coh - clo.G_coh) <= 1e-10 * std::abs(clo.G_coh));
      }
    }
  }

  TEST_CASE("closed mode is a strict subset of the series domain") {
    const auto off_axis = std_params(std::complex<double>(0.2, 0.3));
    CHECK_NOTHROW(coherent::coherent_radial(off_axis, coherent::Mode::series, 1.0));
    CHECK_THROWS_AS(coherent::coherent_radial(off_axis, coherent::Mode::closed, 1.0),
                    std::domain_error);
    const auto negative = std_params(-0.4);
    CHECK_THROWS_AS(coherent::coherent_radial(negative, coherent::Mode::closed, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(coherent::coherent_radial(std_params(1.1), coherent::Mode::series, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(coherent::coherent_radial(std_params(0.3, 0), coherent::Mode::series, 1.0),
                    std::invalid_argument);
  }

  TEST_CASE("zero displacement reduces the upper profile to the lowest eigenstate") {
    const auto cp = std_params(0.0);
    const auto level0 = coherent::anchor_level(cp);
    REQUIRE(level0.valid);
    const auto st = radial::make_radial_state(level0);
    const double e = level0.epsilon, g = level0.gamma;
    double ref_f = 0.0, ref_g = 0.0, eigen_spread = 0.0, eigen_ref = 0.0;
    for (double r : {0.4, 1.1, 3.0, 7.5}) {
      const auto pair = coherent::coherent_radial(cp, coherent::Mode::closed, r);
      const double ratio_f = pair.F_coh.real() / st.F(r);
      // the lower profile collapses onto the lowest ladder shape r^g e^{-e r},
      // which is one rung below the eigenstate's lower component
      const double ratio_g = pair.G_coh.real() / (std::pow(r, g) * std::exp(-e * r));
      const double eigen_ratio = pair.G_coh.real() / st.G(r);
      if (ref_f == 0.0) {
        ref_f = ratio_f;
        ref_g = ratio_g;
        eigen_ref = eigen_ratio;
        continue;
      }
      CHECK(std::abs(ratio_f / ref_f - 1.0) < 1e-12);
      CHECK(std::abs(ratio_g / ref_g - 1.0) < 1e-12);
      eigen_spread = std::max(eigen_spread, std::abs(eigen_ratio / eigen_ref - 1.0));
    }
    CHECK(eigen_spread > 1e-3);  // the eigen lower component is not recovered
  }

  TEST_CASE("closed form decays with the displaced exponent") {
    const double xi = 0.5;
    const auto cp = std_params(xi);
    const auto level0 = coherent::anchor_level(cp);
    const double g = level0.gamma, e = level0.epsilon;
    const double r1 = 1.0, r2 = 2.0;
    const double f1 = coherent::coherent_radial(cp, coherent::Mode::closed, r1).F_coh.real();
    const double f2 = coherent::coherent_radial(cp, coherent::Mode::closed, r2).F_coh.real();
    const double beta =
        (std::log(f1) - std::log(f2) + (g + 1.0) * (std::log(r2) - std::log(r1))) / (r2 - r1);
    CHECK(beta == doctest::Approx(e * (1.0 + xi) / (1.0 - xi)).epsilon(1e-10));
  }

  TEST_CASE("spinor profile is normalized by quadrature, not by the reference form") {
    const auto cp = std_params(0.3);
    const auto sp = coherent::coherent_spinor(cp, 1.0);
    CHECK(sp.C_n_quadrature > 0.0);
    CHECK(sp.relative_gap < 1e-10);  // reference constant happens to be exact
    CHECK(sp.C_n_reference == doctest::Approx(sp.C_n_quadrature).epsilon(1e-9));
    CHECK(sp.D_ratio > 0.0);

    const auto level0 = coherent::anchor_level(cp);
    const auto d = spectrum::level_derived(level0);
    const double want_ratio = 2.0 * level0.epsilon * (1.0 - 0.3 * 0.3) *
                              (2.0 * level0.gamma + 1.0) /
                              ((1.0 - 0.3) * (1.0 - 0.3) * d.eta) *
                              std::exp(0.5 * (std::lgamma(2.0 * level0.gamma) -
                                              std::lgamma(2.0 * level0.gamma + 2.0)));
    CHECK(sp.D_ratio == doctest::Approx(want_ratio).epsilon(1e-12));
  }

  TEST_CASE("lower to upper ratio carries a single r-independent constant") {
    const auto cp = std_params(0.3);
    const auto level0 = coherent::anchor_level(cp);
    const auto d = spectrum::level_derived(level0);
    const double d_ratio = coherent::coherent_spinor(cp, 1.0).D_ratio;
    const double target = (2.0 * level0.gamma + 1.0) / d.eta;
    for (double r : {0.5, 3.0}) {
      const auto pair = coherent::coherent_radial(cp, coherent::Mode::closed, r);
      const double val = d_ratio * r * pair.G_coh.real() / pair.F_coh.real();
      CHECK(val == doctest::Approx(target).epsilon(1e-12));
    }
  }

  TEST_CASE("spinor sampling requires a longitudinal direction") {
    auto cp = std_params(0.3);
    cp.qn = model::make_quantum_numbers(1, 0.0, +1, 0);
    CHECK_THROWS_AS(coherent::coherent_spinor(cp, 1.0), std::domain_error);
  }

  TEST_CASE("family anchor ignores the requested radial index") {
    auto cp = std_params(0.2);
    cp.qn.n_r = 4;
    const auto level = coherent::anchor_level(cp);
    REQUIRE(level.valid);
    CHECK(level.qn.n_r == 0);
    CHECK(level.epsilon ==
          doctest::Approx(level.alpha / (level.gamma + 1.0)).epsilon(1e-15));
  }

  TEST_CASE("repulsive parameters leave no family to displace") {
    auto cp = std_params(0.2);
    cp.params.omega = 0.1;
    cp.params.s1 = 2.0;
    CHECK_THROWS_AS(coherent::coherent_radial(cp, coherent::Mode::closed, 1.0),
                    std::domain_error);
  }
}
