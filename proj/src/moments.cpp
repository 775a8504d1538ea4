#include "pearsonsde/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "pearsonsde/linalg.hpp"

namespace pearsonsde {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void QuadraticDiffusionSpec::validate() const {
  const int dd = d * d;
  if (d <= 0) throw std::invalid_argument("QuadraticDiffusionSpec: d must be positive");
  if (alpha_check.rows() != dd || alpha_check.cols() != dd)
    throw std::invalid_argument("QuadraticDiffusionSpec: alpha_check must be d^2 x d^2");
  if (beta_check.rows() != dd || beta_check.cols() != d)
    throw std::invalid_argument("QuadraticDiffusionSpec: beta_check must be d^2 x d");
  if (gamma_check.size() != dd)
    throw std::invalid_argument("QuadraticDiffusionSpec: gamma_check must have d^2 entries");

  const double scale = 1.0 + alpha_check.cwiseAbs().maxCoeff() +
                       beta_check.cwiseAbs().maxCoeff() + gamma_check.cwiseAbs().maxCoeff();
  const double tol = 1e-12 * scale;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const int ij = i + j * d;
      const int ji = j + i * d;
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          const int kl = k + l * d;
          const int lk = l + k * d;
          const double sym_ij = alpha_check(ij, kl) + alpha_check(ij, lk);
          const double sym_ji = alpha_check(ji, kl) + alpha_check(ji, lk);
          if (std::abs(sym_ij - sym_ji) > tol)
            throw std::invalid_argument("QuadraticDiffusionSpec: rows (i,j)/(j,i) of alpha_check disagree on symmetric inputs");
        }
      }
      if ((beta_check.row(ij) - beta_check.row(ji)).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("QuadraticDiffusionSpec: rows (i,j)/(j,i) of beta_check disagree");
      if (std::abs(gamma_check(ij) - gamma_check(ji)) > tol)
        throw std::invalid_argument("QuadraticDiffusionSpec: gamma_check entries (i,j)/(j,i) disagree");
    }
  }
}

void LinearPearsonModel::validate() const {
  const int d = dim();
  if (A.rows() != d || A.cols() != d)
    throw std::invalid_argument("LinearPearsonModel: A must be d x d");
  if (diffusion.d != d) throw std::invalid_argument("LinearPearsonModel: diffusion dimension mismatch");
  diffusion.validate();
}

MatrixXd sigma_sigma_t(const QuadraticDiffusionSpec& spec, const VectorXd& x) {
  const VectorXd v = spec.alpha_check * vec((x * x.transpose()).eval()) +
                     spec.beta_check * x + spec.gamma_check;
  const MatrixXd m = unvec(v, spec.d, spec.d);
  return 0.5 * (m + m.transpose());
}

VectorXd mean_at(const LinearPearsonModel& model, const VectorXd& m0, double t) {
  return model.b + expm((model.A * t).eval()) * (m0 - model.b);
}

namespace {

// The five convolution blocks shared by covariance_vec and the omega cache.
struct MomentBlocks {
  MatrixXd e_ft;  // exp((A (+) A + alpha) t)
  MatrixXd i1, i2, i3;  // d^2 x d^2
  MatrixXd i4;          // d^2 x d
  MatrixXd i5;          // d^2 x d^2
};

MomentBlocks moment_blocks(const LinearPearsonModel& model, double t) {
  const int d = model.dim();
  const int dd = d * d;
  const MatrixXd eye_d = MatrixXd::Identity(d, d);
  const MatrixXd ksum = kron_sum(model.A, model.A);
  const MatrixXd f = ksum + model.diffusion.alpha_check;
  MomentBlocks blocks;
  blocks.e_ft = expm((f * t).eval());
  blocks.i1 = van_loan_integral(f, model.diffusion.alpha_check, ksum, t);
  blocks.i2 = van_loan_integral(f, model.diffusion.alpha_check, kron(eye_d, model.A), t);
  blocks.i3 = van_loan_integral(f, model.diffusion.alpha_check, kron(model.A, eye_d), t);
  blocks.i4 = van_loan_integral(f, model.diffusion.beta_check, model.A, t);
  blocks.i5 = van_loan_integral(f, MatrixXd::Identity(dd, dd), MatrixXd::Zero(dd, dd), t);
  return blocks;
}

}  // namespace

VectorXd covariance_vec(const LinearPearsonModel& model, const MomentState& initial, double t) {
  model.validate();
  const int d = model.dim();
  if (initial.mean.size() != d || initial.cov.rows() != d || initial.cov.cols() != d)
    throw std::invalid_argument("covariance_vec: initial state dimension mismatch");
  const double cscale = 1.0 + initial.cov.cwiseAbs().maxCoeff();
  if ((initial.cov - initial.cov.transpose()).cwiseAbs().maxCoeff() > 1e-10 * cscale)
    throw std::invalid_argument("covariance_vec: initial covariance must be symmetric");
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(initial.cov);
  if (es.eigenvalues().minCoeff() < -1e-10 * cscale)
    throw std::invalid_argument("covariance_vec: initial covariance must be positive semidefinite");

  const MomentBlocks blocks = moment_blocks(model, t);
  const VectorXd u = initial.mean - model.b;
  return blocks.e_ft * vec(initial.cov) +
         blocks.i1 * vec((u * u.transpose()).eval()) +
         blocks.i2 * vec((u * model.b.transpose()).eval()) +
         blocks.i3 * vec((model.b * u.transpose()).eval()) +
         blocks.i4 * u +
         blocks.i5 * vec(sigma_sigma_t(model.diffusion, model.b));
}

MatrixXd omega_h(const LinearPearsonModel& model, const VectorXd& x, double h) {
  const int d = model.dim();
  const MomentState start{x, MatrixXd::Zero(d, d)};
  const MatrixXd c = unvec(covariance_vec(model, start, h), d, d);
  return 0.5 * (c + c.transpose());
}

MatrixXd OmegaCache::omega(const VectorXd& x) const {
  const VectorXd u = x - b;
  const VectorXd v = i1 * vec((u * u.transpose()).eval()) + m_lin * u + c0;
  const MatrixXd m = unvec(v, d, d);
  return 0.5 * (m + m.transpose());
}

OmegaCache precompute_omega_cache(const LinearPearsonModel& model, double h) {
  model.validate();
  const int d = model.dim();
  const MatrixXd eye_d = MatrixXd::Identity(d, d);
  const MomentBlocks blocks = moment_blocks(model, h);
  OmegaCache cache;
  cache.d = d;
  cache.h = h;
  cache.b = model.b;
  cache.e_ah = expm((model.A * h).eval());
  cache.i1 = blocks.i1;
  // vec(u b^T) = (b kron I) u and vec(b u^T) = (I kron b) u fold the
  // u-linear blocks into one d^2 x d map.
  cache.m_lin = blocks.i2 * kron(model.b, eye_d) + blocks.i3 * kron(eye_d, model.b) + blocks.i4;
  cache.c0 = blocks.i5 * vec(sigma_sigma_t(model.diffusion, model.b));
  return cache;
}

double generator_apply(const VectorXd& drift, const MatrixXd& sigma2,
                       const VectorXd& grad, const MatrixXd& hess) {
  return grad.dot(drift) + 0.5 * (hess * sigma2).trace();
}

}  // namespace pearsonsde
