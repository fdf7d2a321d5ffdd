#include <cmath>
#include <stdexcept>

#include "csdirac/ode_oracle.hpp"
#include "doctest.h"

using namespace csdirac;

namespace {
const model::ModelParams kStd{1.0, 2.0, 0.75, 0.8, 0.3};
const model::QuantumNumbers kQn = model::make_quantum_numbers(1, 0.6, +1, 0);
}  // namespace

TEST_SUITE("ode_oracle") {
  TEST_CASE("hydrogen-like well reproduces the quantization values") {
    // gamma = 1/2: epsilon_n = alpha/(n + 3/2)
    const auto eps = ode_oracle::fd_spectrum(0.5, 0.5, {1999, 90.0, 3}, 2);
    CHECK(std::abs(eps[0] - 1.0 / 3.0) * 3.0 < 1e-5);
    CHECK(std::abs(eps[1] - 0.2) * 5.0 < 1e-5);

    const double g = std::sqrt(1.25), want = 1.0 / (g + 1.0);
    const auto eps2 = ode_oracle::fd_spectrum(g, 1.0, {1999, 30.0 / want, 3}, 1);
    CHECK(std::abs(eps2[0] - want) / want < 1e-5);
  }

  TEST_CASE("bound levels come out strictly ordered") {
    const auto eps = ode_oracle::fd_spectrum(0.5, 0.5, {1999, 120.0, 2}, 3);
    REQUIRE(eps.size() == 3);
    CHECK(eps[0] > eps[1]);
    CHECK(eps[1] > eps[2]);
  }

  TEST_CASE("single-grid error shrinks like the square of the step") {
    const double g = std::sqrt(1.5 * 1.5 + 0.75 * 0.75 * 0.8 * 0.8) / 0.75;
    const double exact = 1.0 / (g + 1.0);  // alpha = 1, lowest level
    const double R = 30.0 / exact;
    const auto coarse = ode_oracle::fd_single_grid(g, 1.0, R, 1000, 1, 0);
    const auto fine = ode_oracle::fd_single_grid(g, 1.0, R, 2001, 1, 0);
    const double e1 = std::abs(coarse.epsilons[0] - exact);
    const double e2 = std::abs(fine.epsilons[0] - exact);
    const double ratio = e1 / e2;
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
  }

  TEST_CASE("extrapolated value is insensitive to the cutoff") {
    // matched step h = 0.045 on both domains isolates the cutoff effect
    const auto a = ode_oracle::fd_spectrum(0.5, 0.5, {1999, 90.0, 3}, 1);
    const auto b = ode_oracle::fd_spectrum(0.5, 0.5, {2499, 112.5, 3}, 1);
    CHECK(std::abs(a[0] - b[0]) / a[0] < 1e-10);
  }

  TEST_CASE("repulsive coupling yields the no-bound-state signal") {
    CHECK_THROWS_AS(ode_oracle::fd_spectrum(0.5, -0.5, {1999, 30.0, 1}, 1),
                    std::domain_error);
  }

  TEST_CASE("algebraic levels agree with the discretized operator") {
    for (int n_r : {0, 1}) {
      auto qn = kQn;
      qn.n_r = n_r;
      const auto level = spectrum::energy_level(kStd, qn, +1);
      REQUIRE(level.valid);
      const auto cmp = ode_oracle::oracle_compare(level, {1999, 0.0, 3});
      INFO("n_r=", n_r);
      CHECK(cmp.relative_gap < 1e-5);
      CHECK(cmp.eigenvector_overlap > 1.0 - 1e-6);
      CHECK(cmp.epsilon_algebraic ==
            doctest::Approx(level.epsilon).epsilon(1e-15));
    }
  }

  TEST_CASE("comparison refuses invalid levels") {
    model::ModelParams p = kStd;
    p.omega = 0.1;
    p.s1 = 2.0;
    const auto bad = spectrum::energy_level(p, kQn, +1);
    REQUIRE_FALSE(bad.valid);
    CHECK_THROWS_AS(ode_oracle::oracle_compare(bad, {1999, 0.0, 2}),
                    std::invalid_argument);
  }

  TEST_CASE("discretization spec bounds are enforced") {
    CHECK_THROWS_AS(ode_oracle::fd_single_grid(0.5, 0.5, 30.0, 100, 1, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(ode_oracle::fd_spectrum(0.5, 0.5, {1999, 30.0, 0}, 1),
                    std::invalid_argument);
  }
}
