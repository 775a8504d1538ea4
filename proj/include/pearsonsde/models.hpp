#pragma once

#include <array>
#include <functional>

#include "pearsonsde/moments.hpp"

namespace pearsonsde {

// ---------------------------------------------------------------- Wright-Fisher
// Reduced three-allele model on the open simplex:
//   F(x) = kappa + K x - x x^T lambda,  SigmaSigma^T(x) = diag(x) - x x^T.

struct WfParams {
  Eigen::Vector3d kappa;
  Eigen::Matrix3d K;
  Eigen::Vector3d lambda;

  // (kappa, K row-major, lambda), 15 entries.
  Eigen::VectorXd pack() const;
  static WfParams unpack(const Eigen::VectorXd& theta);
};

struct WfNaturalParams {
  double tau = 0.0;
  Eigen::Vector4d q;
  Eigen::Matrix4d P;  // row-stochastic mutation-probability matrix

  // (q1..q3, P columns 1..3 row-major), 15 entries; the remaining natural
  // parameters are pinned by row sums and the (tau, q4) reference values.
  Eigen::VectorXd pack() const;
};

WfParams wf_natural_to_reduced(const WfNaturalParams& nat);
WfNaturalParams wf_reduced_to_natural(const WfParams& red, double tau0, double q4);

// Jacobian of the packed natural vector with respect to the packed reduced
// vector. The map is affine for fixed (tau0, q4), so this is constant.
Eigen::MatrixXd wf_natural_jacobian(double tau0);

Eigen::Vector3d wf_drift(const WfParams& p, const Eigen::Vector3d& x);
Eigen::Matrix3d wf_drift_jacobian(const WfParams& p, const Eigen::Vector3d& x);
// Hessians of the drift components (constant in x for this model).
std::array<Eigen::Matrix3d, 3> wf_drift_hessians(const WfParams& p);

Eigen::Matrix3d wf_sigma2(const Eigen::Vector3d& x);
QuadraticDiffusionSpec wf_diffusion_spec();

// --------------------------------------------------- Kramers oscillator (SK)
// dX = V dt,  dV = (-eta V + a X^3 + b X^2 + c X + d) dt + sigma(V) dW with
// sigma^2(v) = alpha v^2 + beta v + gamma.

struct SkParams {
  double eta = 0, a = 0, b = 0, c = 0, d = 0, alpha = 0, beta = 0, gamma = 0;

  Eigen::VectorXd pack() const;  // (eta, a, b, c, d, alpha, beta, gamma)
  static SkParams unpack(const Eigen::VectorXd& theta);
  // a < 0, alpha > 0, beta^2 < 4 alpha gamma, alpha < 2 eta.
  bool admissible() const;
};

Eigen::Vector2d sk_drift(const SkParams& p, const Eigen::Vector2d& xv);
Eigen::Matrix2d sk_drift_jacobian(const SkParams& p, const Eigen::Vector2d& xv);
std::array<Eigen::Matrix2d, 2> sk_drift_hessians(const SkParams& p, const Eigen::Vector2d& xv);
double sk_sigma2_v(const SkParams& p, double v);
QuadraticDiffusionSpec sk_diffusion_spec(const SkParams& p);

// ------------------------------------------------------------------ splitting
// X' = A (X - b) + N(X). The nonlinear half-step flow is closed form when
// available (oscillator), otherwise integrated by one RK4 step.
struct SplitNonlinearModel {
  LinearPearsonModel linear;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> N;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> DN;
  // flow(h, x); log|det Df_h| is identically zero for the closed-form case.
  std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)> closed_flow;

  bool has_closed_flow() const { return static_cast<bool>(closed_flow); }
};

// The splitting centers use empirical moments of the data, held fixed while
// optimizing: b for Wright-Fisher, (E[X], E[X^2]) for the oscillator.
SplitNonlinearModel wf_split(const WfParams& p, const Eigen::Vector3d& b);
SplitNonlinearModel sk_split(const SkParams& p, double mean_x, double second_moment_x);
double sk_bx(const SkParams& p, double mean_x, double second_moment_x);

// ------------------------------------------- invariant-law reporting helpers
struct SkewTParams {
  double nu = 0, mu = 0, nu_sigma2 = 0, omega = 0;
};
SkewTParams skew_t_params(double eta, double alpha, double beta, double gamma);

struct SkInvariantDensities {
  std::function<double(double)> log_pi_x;  // unnormalized
  std::function<double(double)> log_pi_v;  // unnormalized
};
SkInvariantDensities sk_invariant_densities(const SkParams& p);

// ----------------------------------------------------- scalar check models
LinearPearsonModel ou_model(double lambda, double mean, double sigma);
// dX = -lambda (X - m) dt + sigma sqrt(X) dW.
LinearPearsonModel cir_model(double lambda, double mean, double sigma);

}  // namespace pearsonsde
