#include "doctest.h"

#include <chrono>
#include <cmath>
#include <random>

#include "pearsonsde/models.hpp"
#include "pearsonsde/moments.hpp"
#include "support/model_support.hpp"

using Eigen::MatrixXd;
using Eigen::VectorXd;
using namespace pearsonsde;

TEST_CASE("sigma_sigma_t: scalar and fixed quadratic cases") {
  LinearPearsonModel ou = ou_model(1.5, 0.3, 0.8);
  VectorXd x(1);
  x << 2.0;
  CHECK(sigma_sigma_t(ou.diffusion, x)(0, 0) == doctest::Approx(0.64).epsilon(1e-14));

  LinearPearsonModel cir = cir_model(1.5, 0.3, 0.8);
  CHECK(sigma_sigma_t(cir.diffusion, x)(0, 0) == doctest::Approx(0.64 * 2.0).epsilon(1e-14));
}

TEST_CASE("diffusion spec validation rejects asymmetric rows") {
  QuadraticDiffusionSpec spec;
  spec.d = 2;
  spec.alpha_check = MatrixXd::Zero(4, 4);
  spec.beta_check = MatrixXd::Zero(4, 2);
  spec.gamma_check = VectorXd::Zero(4);
  spec.gamma_check(1) = 1.0;  // row (2,1) without matching (1,2)
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.gamma_check(2) = 1.0;
  CHECK_NOTHROW(spec.validate());
}

TEST_CASE("mean_at: OU closed form and long-time limit") {
  LinearPearsonModel ou = ou_model(0.7, -0.4, 0.5);
  VectorXd x0(1);
  x0 << 2.0;
  const double t = 0.9;
  const double want = -0.4 + std::exp(-0.7 * t) * (2.0 + 0.4);
  CHECK(mean_at(ou, x0, t)(0) == doctest::Approx(want).epsilon(1e-13));
  CHECK(mean_at(ou, x0, 60.0)(0) == doctest::Approx(-0.4).epsilon(1e-12));
}

TEST_CASE("covariance_vec: OU and CIR closed forms") {
  const double lam = 1.3, m = 0.4, sig = 0.6;
  LinearPearsonModel ou = ou_model(lam, m, sig);
  VectorXd x0(1);
  x0 << 1.7;
  MatrixXd c0(1, 1);
  c0 << 0.25;
  for (double t : {0.05, 0.4, 2.0}) {
    const double want = std::exp(-2 * lam * t) * 0.25 +
                        sig * sig * (1.0 - std::exp(-2 * lam * t)) / (2 * lam);
    CHECK(covariance_vec(ou, {x0, c0}, t)(0) == doctest::Approx(want).epsilon(1e-12));
  }

  LinearPearsonModel cir = cir_model(lam, m, sig);
  MatrixXd zero(1, 1);
  zero << 0.0;
  for (double t : {0.05, 0.4, 2.0}) {
    const double e1 = std::exp(-lam * t);
    const double want = x0(0) * sig * sig / lam * (e1 - e1 * e1) +
                        m * sig * sig / (2 * lam) * (1 - e1) * (1 - e1);
    CHECK(covariance_vec(cir, {x0, zero}, t)(0) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("covariance_vec: matches the moment-ODE oracle on random models") {
  std::mt19937_64 rng(20260824);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 9; ++trial) {
    const int d = 1 + trial % 3;
    LinearPearsonModel model = testsupport::random_stable_model(rng, d);
    VectorXd m0(d);
    for (int i = 0; i < d; ++i) m0(i) = g(rng);
    MatrixXd r = MatrixXd::Random(d, d);
    MatrixXd c0 = 0.2 * (r * r.transpose());
    for (double t : {0.01, 0.1, 1.0}) {
      const VectorXd got = covariance_vec(model, {m0, c0}, t);
      const MomentState want = testsupport::moment_ode_oracle(model, {m0, c0}, t);
      const double denom = std::max(vec(want.cov).norm(), 1e-12);
      CHECK((got - vec(want.cov)).norm() / denom < 1e-9);
      CHECK((mean_at(model, m0, t) - want.mean).norm() < 1e-9 * (1.0 + want.mean.norm()));
    }
  }
}

TEST_CASE("covariance_vec: rejects indefinite or asymmetric initial covariance") {
  LinearPearsonModel ou = ou_model(1.0, 0.0, 1.0);
  VectorXd m0(1);
  m0 << 0.0;
  MatrixXd bad(1, 1);
  bad << -0.5;
  CHECK_THROWS_AS(covariance_vec(ou, {m0, bad}, 0.1), std::invalid_argument);
}

TEST_CASE("omega_h: cache agrees with the direct route and is fast") {
  std::mt19937_64 rng(99);
  LinearPearsonModel model = testsupport::random_stable_model(rng, 3);
  const double h = 0.05;
  OmegaCache cache = precompute_omega_cache(model, h);
  std::normal_distribution<double> g(0.0, 1.0);

  std::vector<VectorXd> points;
  for (int i = 0; i < 1000; ++i) {
    VectorXd x(3);
    for (int j = 0; j < 3; ++j) x(j) = g(rng);
    points.push_back(x);
  }

  for (int i = 0; i < 20; ++i) {
    const MatrixXd direct = omega_h(model, points[i], h);
    const MatrixXd cached = cache.omega(points[i]);
    CHECK((direct - cached).cwiseAbs().maxCoeff() < 1e-12 * (1.0 + direct.cwiseAbs().maxCoeff()));
  }

  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  double acc = 0;
  for (const auto& x : points) acc += cache.omega(x)(0, 0);
  const auto t1 = clock::now();
  for (const auto& x : points) acc += omega_h(model, x, h)(0, 0);
  const auto t2 = clock::now();
  const double cached_us = std::chrono::duration<double>(t1 - t0).count();
  const double direct_us = std::chrono::duration<double>(t2 - t1).count();
  INFO("cached ", cached_us, "s direct ", direct_us, "s acc ", acc);
  CHECK(direct_us > 5.0 * cached_us);
}

TEST_CASE("omega_h: small-step expansion has the claimed h and h^2 coefficients") {
  std::mt19937_64 rng(7);
  LinearPearsonModel model = testsupport::random_stable_model(rng, 2);
  VectorXd x(2);
  x << 0.3, -0.8;

  auto omega = [&](double hh) { return omega_h(model, x, hh); };
  const auto coeffs = testsupport::richardson_h_coefficients(omega, 1e-2);
  const MatrixXd c1_want = sigma_sigma_t(model.diffusion, x);
  const MatrixXd c2_want = testsupport::omega_h2_coefficient(model, x);
  CHECK((coeffs.c1 - c1_want).norm() / c1_want.norm() < 1e-6);
  CHECK((coeffs.c2 - c2_want).norm() / c2_want.norm() < 1e-5);
}

TEST_CASE("generator_apply: quadratic observable identity") {
  // phi(x) = x^T Q x + p^T x with constant derivatives supplied by hand.
  MatrixXd q(2, 2);
  q << 1.0, 0.3, 0.3, 2.0;
  VectorXd p(2);
  p << -0.5, 1.5;
  VectorXd x(2);
  x << 0.7, -0.2;
  VectorXd drift(2);
  drift << 0.4, -1.1;
  MatrixXd sig2(2, 2);
  sig2 << 0.9, 0.1, 0.1, 0.6;
  const VectorXd grad = 2.0 * q * x + p;
  const MatrixXd hess = 2.0 * q;
  const double want = grad.dot(drift) + q(0, 0) * sig2(0, 0) + 2 * q(0, 1) * sig2(0, 1) + q(1, 1) * sig2(1, 1);
  CHECK(generator_apply(drift, sig2, grad, hess) == doctest::Approx(want).epsilon(1e-13));
}
