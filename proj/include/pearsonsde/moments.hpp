#pragma once

#include <Eigen/Dense>

namespace pearsonsde {

// Quadratic squared-diffusion coefficient in vectorized form:
//   vec(SigmaSigma^T(x)) = alpha_check vec(x x^T) + beta_check x + gamma_check.
// Row (i,j) is stored at index i + j*d (column-major, matching vec).
struct QuadraticDiffusionSpec {
  int d = 0;
  Eigen::MatrixXd alpha_check;  // d^2 x d^2
  Eigen::MatrixXd beta_check;   // d^2 x d
  Eigen::VectorXd gamma_check;  // d^2

  // Shape checks plus (i,j)/(j,i) row compatibility, so SigmaSigma^T is
  // symmetric for every x and the vectorized flow preserves symmetric states.
  void validate() const;
};

// dX = A (X - b) dt + Sigma(X) dW with quadratic SigmaSigma^T.
struct LinearPearsonModel {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  QuadraticDiffusionSpec diffusion;

  int dim() const { return static_cast<int>(b.size()); }
  void validate() const;
};

struct MomentState {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
};

Eigen::MatrixXd sigma_sigma_t(const QuadraticDiffusionSpec& spec, const Eigen::VectorXd& x);

// E[X_t] = b + e^{At} (m0 - b).
Eigen::VectorXd mean_at(const LinearPearsonModel& model, const Eigen::VectorXd& m0, double t);

// vec(Cov(X_t)) from initial (mean, cov), exact via block matrix exponentials.
Eigen::VectorXd covariance_vec(const LinearPearsonModel& model, const MomentState& initial, double t);

// One-step conditional covariance from the point x over a step of length h.
Eigen::MatrixXd omega_h(const LinearPearsonModel& model, const Eigen::VectorXd& x, double h);

// Precomputed blocks making omega() one quadratic form per call. With
// u = x - b:  vec(Omega) = i1 vec(u u^T) + m_lin u + c0.
struct OmegaCache {
  int d = 0;
  double h = 0.0;
  Eigen::VectorXd b;
  Eigen::MatrixXd e_ah;
  Eigen::MatrixXd i1;     // d^2 x d^2
  Eigen::MatrixXd m_lin;  // d^2 x d
  Eigen::VectorXd c0;     // d^2

  Eigen::MatrixXd omega(const Eigen::VectorXd& x) const;
  Eigen::VectorXd mean(const Eigen::VectorXd& x) const { return b + e_ah * (x - b); }
};

OmegaCache precompute_omega_cache(const LinearPearsonModel& model, double h);

// L phi(x) = grad(phi) . drift + 0.5 tr(hess(phi) SigmaSigma^T), with the
// derivative information supplied by the caller.
double generator_apply(const Eigen::VectorXd& drift, const Eigen::MatrixXd& sigma2,
                       const Eigen::VectorXd& grad, const Eigen::MatrixXd& hess);

}  // namespace pearsonsde
