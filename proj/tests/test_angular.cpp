#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "molspec/angular.hpp"

using namespace molspec;

TEST_CASE("angular eigenvalue, B > 0") {
  // Frozen from direct evaluation of the closed form, cross-checked by the
  // finite-difference oracle (see test_oracle.cpp).
  auto sol = angular_eigenvalue({0, 0, 1.0, 9.0});
  CHECK(sol.ell_tilde == doctest::Approx(4.541381265149109).epsilon(1e-12));
  CHECK(sol.e_theta == doctest::Approx(25.165525060596433).epsilon(1e-12));

  sol = angular_eigenvalue({1, 2, 9.0, 1.0});
  CHECK(sol.ell_tilde == doctest::Approx(7.2235852642138845).epsilon(1e-12));
  CHECK(sol.e_theta == doctest::Approx(59.40376933358186).epsilon(1e-12));
}

TEST_CASE("angular eigenvalue, B = 0 limiting branches") {
  auto even = angular_eigenvalue({0, 0, 0.0, 0.0, Parity::even});
  CHECK(even.ell_tilde == 0.0);
  CHECK(even.e_theta == 0.0);

  auto odd = angular_eigenvalue({0, 0, 0.0, 0.0, Parity::odd});
  CHECK(odd.ell_tilde == doctest::Approx(1.0));
  CHECK(odd.e_theta == doctest::Approx(2.0));

  // Even branch with n_tilde: ell = 2*n_tilde + sqrt(A).
  auto e2 = angular_eigenvalue({2, 0, 4.0, 0.0, Parity::even});
  CHECK(e2.ell_tilde == doctest::Approx(6.0));
}

TEST_CASE("e_theta = ell_tilde*(ell_tilde+1) invariant") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> ab(0.0, 20.0);
  std::uniform_int_distribution<int> nm(0, 8);
  for (int i = 0; i < 500; ++i) {
    AngularChannel ch{nm(rng), nm(rng) - 4, ab(rng), ab(rng)};
    auto sol = angular_eigenvalue(ch);
    CHECK(sol.ell_tilde >= 0.0);
    CHECK(sol.e_theta ==
          doctest::Approx(sol.ell_tilde * (sol.ell_tilde + 1)).epsilon(1e-12));
  }
}

TEST_CASE("expanded separation-constant identity") {
  // E_theta expands to g^2 + 2gq + 2g + 2q + 1 + B with g = 2n + sqrt(A~),
  // q = sqrt(1/4 + B).
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ab(1e-6, 30.0);
  std::uniform_int_distribution<int> nt(0, 6);
  for (int i = 0; i < 500; ++i) {
    int n = nt(rng);
    double A = ab(rng), B = ab(rng);
    double g = 2.0 * n + std::sqrt(A);
    double q = std::sqrt(0.25 + B);
    double expanded = g * g + 2 * g * q + 2 * g + 2 * q + 1 + B;
    CHECK(angular_eigenvalue({n, 0, A, B}).e_theta ==
          doctest::Approx(expanded).epsilon(1e-12));
  }
}

TEST_CASE("m-sign symmetry") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> ab(0.0, 20.0);
  std::uniform_int_distribution<int> mm(0, 10);
  for (int i = 0; i < 200; ++i) {
    int m = mm(rng);
    double A = ab(rng), B = ab(rng);
    auto plus = angular_eigenvalue({1, m, A, B});
    auto minus = angular_eigenvalue({1, -m, A, B});
    CHECK(plus.e_theta == minus.e_theta);
    CHECK(plus.ell_tilde == minus.ell_tilde);
  }
}

TEST_CASE("e_theta strictly increasing in each argument (B > 0)") {
  AngularChannel base{1, 1, 2.0, 3.0};
  double e0 = angular_eigenvalue(base).e_theta;
  CHECK(angular_eigenvalue({2, 1, 2.0, 3.0}).e_theta > e0);
  CHECK(angular_eigenvalue({1, 2, 2.0, 3.0}).e_theta > e0);
  CHECK(angular_eigenvalue({1, 1, 2.5, 3.0}).e_theta > e0);
  CHECK(angular_eigenvalue({1, 1, 2.0, 3.5}).e_theta > e0);
}

TEST_CASE("channel validation") {
  CHECK_THROWS_AS(angular_eigenvalue({-1, 0, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(angular_eigenvalue({0, 0, -1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(angular_eigenvalue({0, 0, 1.0, -1.0}), std::invalid_argument);
}

TEST_CASE("oscillation quanta inversion") {
  double l0 = angular_eigenvalue({0, 0, 1.0, 9.0}).ell_tilde;
  CHECK(oscillation_quanta(l0, 0, 1.0, 9.0) == 0);
  CHECK(oscillation_quanta(l0 + 4.0, 0, 1.0, 9.0) == 2);
  CHECK_THROWS_AS(oscillation_quanta(5.0, 0, 1.0, 9.0), std::invalid_argument);
  CHECK_THROWS_AS(oscillation_quanta(4.0, 0, 1.0, 9.0), std::domain_error);
  CHECK_THROWS_AS(oscillation_quanta(10.0, 0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("oscillation quanta round trip") {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> ab(1e-3, 25.0);
  std::uniform_int_distribution<int> nt(0, 10);
  std::uniform_int_distribution<int> mm(-5, 5);
  for (int i = 0; i < 500; ++i) {
    AngularChannel ch{nt(rng), mm(rng), ab(rng), ab(rng)};
    auto sol = angular_eigenvalue(ch);
    CHECK(oscillation_quanta(sol.ell_tilde, ch.m, ch.A, ch.B) == ch.n_tilde);
  }
}

TEST_CASE("k roots, worked example") {
  // Inputs taken as given; the roots follow from the quadratic in k.
  auto rc = nu_k_roots(1.0, 9.0, 25.1665);
  CHECK(rc.k2 == doctest::Approx(4.54187).epsilon(1e-5));
  CHECK(rc.k1 == doctest::Approx(10.62463).epsilon(1e-5));
  CHECK(rc.gamma_q == 37.0);

  auto zero = nu_k_roots(0.0, 0.0, 0.0);
  CHECK(zero.k1 == 0.0);
  CHECK(zero.k2 == 0.0);
}

TEST_CASE("discriminant vanishes at k2 for randomized inputs") {
  std::mt19937 rng(33);
  std::uniform_real_distribution<double> d(0.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    auto rc = nu_k_roots(d(rng), d(rng), d(rng));
    double scale = rc.beta_q * rc.beta_q;
    if (scale < 1.0) scale = 1.0;
    CHECK(std::abs(rc.discriminant()) / scale < 1e-10);
  }
}

TEST_CASE("discriminant also vanishes at k1") {
  auto rc = nu_k_roots(3.0, 7.0, 40.0);
  double alpha1 = 4.0 * 40.0 - 8.0 * rc.k1 + 1.0;
  double beta1 = 4.0 * 40.0 - 4.0 * 3.0 + 4.0 * 7.0 - 8.0 * rc.k1 + 2.0;
  CHECK(std::abs(beta1 * beta1 - 4.0 * alpha1 * rc.gamma_q) < 1e-9);
}
