#include "pearsonsde/models.hpp"

#include <cmath>
#include <stdexcept>

namespace pearsonsde {

using Eigen::Matrix2d;
using Eigen::Matrix3d;
using Eigen::Matrix4d;
using Eigen::MatrixXd;
using Eigen::Vector2d;
using Eigen::Vector3d;
using Eigen::Vector4d;
using Eigen::VectorXd;

// ------------------------------------------------------------- Wright-Fisher

VectorXd WfParams::pack() const {
  VectorXd theta(15);
  theta.head<3>() = kappa;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) theta(3 + 3 * i + j) = K(i, j);
  theta.tail<3>() = lambda;
  return theta;
}

WfParams WfParams::unpack(const VectorXd& theta) {
  if (theta.size() != 15) throw std::invalid_argument("WfParams: expected 15 parameters");
  WfParams p;
  p.kappa = theta.head<3>();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p.K(i, j) = theta(3 + 3 * i + j);
  p.lambda = theta.tail<3>();
  return p;
}

VectorXd WfNaturalParams::pack() const {
  VectorXd out(15);
  out.head<3>() = q.head<3>();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 3; ++c) out(3 + 3 * r + c) = P(r, c);
  return out;
}

WfParams wf_natural_to_reduced(const WfNaturalParams& nat) {
  WfParams red;
  const double half_tau = 0.5 * nat.tau;
  for (int i = 0; i < 3; ++i) {
    red.lambda(i) = nat.q(i) - nat.q(3);
    red.kappa(i) = half_tau * nat.P(3, i);
    for (int j = 0; j < 3; ++j) {
      red.K(i, j) = half_tau * (nat.P(j, i) - nat.P(3, i));
      if (i == j) red.K(i, j) += red.lambda(i) - half_tau;
    }
  }
  return red;
}

WfNaturalParams wf_reduced_to_natural(const WfParams& red, double tau0, double q4) {
  if (tau0 <= 0) throw std::invalid_argument("wf_reduced_to_natural: tau0 must be positive");
  WfNaturalParams nat;
  nat.tau = tau0;
  nat.q(3) = q4;
  for (int i = 0; i < 3; ++i) nat.q(i) = red.lambda(i) + q4;
  const double inv_half_tau = 2.0 / tau0;
  for (int i = 0; i < 3; ++i) nat.P(3, i) = inv_half_tau * red.kappa(i);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double k = red.K(i, j);
      if (i == j) k -= red.lambda(i) - 0.5 * tau0;
      nat.P(j, i) = inv_half_tau * k + nat.P(3, i);
    }
  }
  for (int r = 0; r < 4; ++r) nat.P(r, 3) = 1.0 - nat.P(r, 0) - nat.P(r, 1) - nat.P(r, 2);
  return nat;
}

MatrixXd wf_natural_jacobian(double tau0) {
  MatrixXd jac = MatrixXd::Zero(15, 15);
  const double s = 2.0 / tau0;
  const auto kappa_idx = [](int i) { return i; };
  const auto k_idx = [](int i, int j) { return 3 + 3 * i + j; };
  const auto lambda_idx = [](int i) { return 12 + i; };
  const auto q_idx = [](int c) { return c; };
  const auto p_idx = [](int r, int c) { return 3 + 3 * r + c; };

  for (int c = 0; c < 3; ++c) jac(q_idx(c), lambda_idx(c)) = 1.0;
  // p_rc for r < 3 depends on K(c, r), kappa(c) and, on the diagonal, lambda(c).
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      jac(p_idx(r, c), k_idx(c, r)) = s;
      jac(p_idx(r, c), kappa_idx(c)) = s;
      if (r == c) jac(p_idx(r, c), lambda_idx(c)) = -s;
    }
  }
  for (int c = 0; c < 3; ++c) jac(p_idx(3, c), kappa_idx(c)) = s;
  return jac;
}

Vector3d wf_drift(const WfParams& p, const Vector3d& x) {
  return p.kappa + p.K * x - x * (x.dot(p.lambda));
}

Matrix3d wf_drift_jacobian(const WfParams& p, const Vector3d& x) {
  return p.K - x.dot(p.lambda) * Matrix3d::Identity() - x * p.lambda.transpose();
}

std::array<Matrix3d, 3> wf_drift_hessians(const WfParams& p) {
  std::array<Matrix3d, 3> h;
  for (int i = 0; i < 3; ++i) {
    Vector3d ei = Vector3d::Zero();
    ei(i) = 1.0;
    h[i] = -(ei * p.lambda.transpose() + p.lambda * ei.transpose());
  }
  return h;
}

Matrix3d wf_sigma2(const Vector3d& x) {
  return Matrix3d(x.asDiagonal()) - x * x.transpose();
}

QuadraticDiffusionSpec wf_diffusion_spec() {
  QuadraticDiffusionSpec spec;
  spec.d = 3;
  spec.alpha_check = -MatrixXd::Identity(9, 9);
  spec.beta_check = MatrixXd::Zero(9, 3);
  for (int i = 0; i < 3; ++i) spec.beta_check(i + 3 * i, i) = 1.0;
  spec.gamma_check = VectorXd::Zero(9);
  return spec;
}

SplitNonlinearModel wf_split(const WfParams& p, const Vector3d& b) {
  SplitNonlinearModel split;
  split.linear.A = wf_drift_jacobian(p, b);
  split.linear.b = b;
  split.linear.diffusion = wf_diffusion_spec();
  const Vector3d fb = wf_drift(p, b);
  const Vector3d lambda = p.lambda;
  split.N = [fb, lambda, b](const VectorXd& x) -> VectorXd {
    const Vector3d u = x - b;
    return fb - u * (u.dot(lambda));
  };
  split.DN = [lambda, b](const VectorXd& x) -> MatrixXd {
    const Vector3d u = x - b;
    return -u.dot(lambda) * Matrix3d::Identity() - u * lambda.transpose();
  };
  return split;
}

// -------------------------------------------------------- Kramers oscillator

VectorXd SkParams::pack() const {
  VectorXd theta(8);
  theta << eta, a, b, c, d, alpha, beta, gamma;
  return theta;
}

SkParams SkParams::unpack(const VectorXd& theta) {
  if (theta.size() != 8) throw std::invalid_argument("SkParams: expected 8 parameters");
  return {theta(0), theta(1), theta(2), theta(3), theta(4), theta(5), theta(6), theta(7)};
}

bool SkParams::admissible() const {
  return a < 0 && alpha > 0 && beta * beta < 4 * alpha * gamma && alpha < 2 * eta;
}

Vector2d sk_drift(const SkParams& p, const Vector2d& xv) {
  const double x = xv(0), v = xv(1);
  return {v, -p.eta * v + ((p.a * x + p.b) * x + p.c) * x + p.d};
}

Matrix2d sk_drift_jacobian(const SkParams& p, const Vector2d& xv) {
  const double x = xv(0);
  Matrix2d j;
  j << 0.0, 1.0, (3.0 * p.a * x + 2.0 * p.b) * x + p.c, -p.eta;
  return j;
}

std::array<Matrix2d, 2> sk_drift_hessians(const SkParams& p, const Vector2d& xv) {
  std::array<Matrix2d, 2> h{Matrix2d::Zero(), Matrix2d::Zero()};
  h[1](0, 0) = 6.0 * p.a * xv(0) + 2.0 * p.b;
  return h;
}

double sk_sigma2_v(const SkParams& p, double v) { return (p.alpha * v + p.beta) * v + p.gamma; }

QuadraticDiffusionSpec sk_diffusion_spec(const SkParams& p) {
  QuadraticDiffusionSpec spec;
  spec.d = 2;
  spec.alpha_check = MatrixXd::Zero(4, 4);
  spec.beta_check = MatrixXd::Zero(4, 2);
  spec.gamma_check = VectorXd::Zero(4);
  // Only the (2,2) component is nonzero: alpha v^2 + beta v + gamma.
  spec.alpha_check(3, 3) = p.alpha;
  spec.beta_check(3, 1) = p.beta;
  spec.gamma_check(3) = p.gamma;
  return spec;
}

double sk_bx(const SkParams& p, double mean_x, double second_moment_x) {
  const double var_x = second_moment_x - mean_x * mean_x;
  const double center = -p.b / (3.0 * p.a);
  const double shift = mean_x - center;
  const double disc = var_x + shift * shift;
  if (disc < 0) throw std::invalid_argument("sk_bx: negative discriminant");
  const double root = std::sqrt(disc);
  // Two valid centerings; take the one nearest the empirical mean.
  return shift >= 0 ? center + root : center - root;
}

SplitNonlinearModel sk_split(const SkParams& p, double mean_x, double second_moment_x) {
  const double slope = 3.0 * p.a * second_moment_x + 2.0 * p.b * mean_x + p.c;
  const double bx = sk_bx(p, mean_x, second_moment_x);

  SplitNonlinearModel split;
  split.linear.A.resize(2, 2);
  split.linear.A << 0.0, 1.0, slope, -p.eta;
  split.linear.b.resize(2);
  split.linear.b << bx, 0.0;
  split.linear.diffusion = sk_diffusion_spec(p);

  const SkParams params = p;
  auto n2 = [params, slope, bx](double x) {
    return ((params.a * x + params.b) * x + params.c) * x + params.d - slope * (x - bx);
  };
  split.N = [n2](const VectorXd& xv) -> VectorXd {
    VectorXd out(2);
    out << 0.0, n2(xv(0));
    return out;
  };
  split.DN = [params, slope](const VectorXd& xv) -> MatrixXd {
    Matrix2d out = Matrix2d::Zero();
    out(1, 0) = (3.0 * params.a * xv(0) + 2.0 * params.b) * xv(0) + params.c - slope;
    return out;
  };
  // x stays constant under N, so v moves linearly: the flow is exact, its
  // Jacobian is unit lower triangular, and log|det Df_h| = 0.
  split.closed_flow = [n2](double h, const VectorXd& xv) -> VectorXd {
    VectorXd out(2);
    out << xv(0), xv(1) + h * n2(xv(0));
    return out;
  };
  return split;
}

SkewTParams skew_t_params(double eta, double alpha, double beta, double gamma) {
  if (alpha <= 0) throw std::invalid_argument("skew_t_params: alpha must be positive");
  const double disc = 4.0 * alpha * gamma - beta * beta;
  if (disc <= 0) throw std::invalid_argument("skew_t_params: requires beta^2 < 4 alpha gamma");
  SkewTParams out;
  out.nu = 2.0 * eta / alpha + 1.0;
  out.mu = -beta / (2.0 * alpha);
  out.nu_sigma2 = disc / (4.0 * alpha * alpha);
  out.omega = 2.0 * beta * eta / (alpha * std::sqrt(disc));
  return out;
}

SkInvariantDensities sk_invariant_densities(const SkParams& p) {
  const SkParams params = p;
  SkInvariantDensities out;
  out.log_pi_x = [params](double x) {
    const double u = -((params.a * 0.25 * x + params.b / 3.0) * x + 0.5 * params.c) * x * x -
                     params.d * x;
    return -(2.0 * params.eta - params.alpha) / params.gamma * u;
  };
  const double disc = std::sqrt(4.0 * params.alpha * params.gamma - params.beta * params.beta);
  out.log_pi_v = [params, disc](double v) {
    const double s2 = sk_sigma2_v(params, v);
    return -(params.eta / params.alpha + 1.0) * std::log(s2) +
           2.0 * params.beta * params.eta / (params.alpha * disc) *
               std::atan((2.0 * params.alpha * v + params.beta) / disc);
  };
  return out;
}

// ------------------------------------------------------ scalar check models

LinearPearsonModel ou_model(double lambda, double mean, double sigma) {
  LinearPearsonModel m;
  m.A = MatrixXd::Constant(1, 1, -lambda);
  m.b = VectorXd::Constant(1, mean);
  m.diffusion.d = 1;
  m.diffusion.alpha_check = MatrixXd::Zero(1, 1);
  m.diffusion.beta_check = MatrixXd::Zero(1, 1);
  m.diffusion.gamma_check = VectorXd::Constant(1, sigma * sigma);
  return m;
}

LinearPearsonModel cir_model(double lambda, double mean, double sigma) {
  LinearPearsonModel m;
  m.A = MatrixXd::Constant(1, 1, -lambda);
  m.b = VectorXd::Constant(1, mean);
  m.diffusion.d = 1;
  m.diffusion.alpha_check = MatrixXd::Zero(1, 1);
  m.diffusion.beta_check = MatrixXd::Constant(1, 1, sigma * sigma);
  m.diffusion.gamma_check = VectorXd::Zero(1);
  return m;
}

}  // namespace pearsonsde
