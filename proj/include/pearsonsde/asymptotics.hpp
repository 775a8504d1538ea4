#pragma once

#include <Eigen/Dense>

#include "pearsonsde/models.hpp"

namespace pearsonsde {

// Fisher-information limits as ergodic path averages. `drift` scales with the
// observation horizon (rate sqrt(N h)), `diffusion` with the sample count
// (rate sqrt(N)); `diffusion` is 0 x 0 when the model has no free diffusion
// parameters.
struct InfoMatrices {
  Eigen::MatrixXd drift;
  Eigen::MatrixXd diffusion;
};

// Wright-Fisher: 15 x 15 over (kappa, K, lambda); rows of `states` must be
// strictly interior simplex points.
InfoMatrices info_wf(const Eigen::MatrixXd& states);

// Oscillator: 5 x 5 over (eta, a, b, c, d) and 3 x 3 over (alpha, beta,
// gamma); rows of `states` are (x, v).
InfoMatrices info_sk(const SkParams& p, const Eigen::MatrixXd& states);

// Per-parameter plug-in standard deviations, drift block first. A relative
// jitter of 1e-10 tr/dim is added before inversion.
Eigen::VectorXd asymptotic_sd(const InfoMatrices& info, long n, double h);

// Delta method: cov of jac * theta.
Eigen::MatrixXd delta_transform(const Eigen::MatrixXd& jac, const Eigen::MatrixXd& cov);

}  // namespace pearsonsde
