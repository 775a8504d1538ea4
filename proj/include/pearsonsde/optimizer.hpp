#pragma once

#include <Eigen/Dense>
#include <functional>
#include <limits>
#include <string>

namespace pearsonsde {

using Objective = std::function<double(const Eigen::VectorXd&)>;

enum class OptMethod { adam_bfgs, lbfgs };

struct OptSchedule {
  OptMethod method = OptMethod::lbfgs;

  // Adam warm-start stage (adam_bfgs only).
  double adam_lr = 0.01;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  int adam_max_iter = 1000;
  double adam_tol = 1e-6;  // early stop on objective change

  // Quasi-Newton stage.
  int max_iter = 1000;
  double param_tol = 1e-5;  // stop when the max parameter change drops below
  double wolfe_c1 = 1e-4;
  double wolfe_c2 = 0.9;
  int lbfgs_memory = 10;

  // Central differences: step = max(fd_rel_step |theta_i|, fd_abs_floor).
  double fd_rel_step = 1e-6;
  double fd_abs_floor = 1e-8;

  std::string trace_path;  // per-iteration CSV diagnostics when non-empty
};

struct FitResult {
  Eigen::VectorXd theta_hat;
  double objective = std::numeric_limits<double>::infinity();
  int iterations = 0;
  long n_evals = 0;
  bool converged = false;
  double wall_clock_sec = 0.0;
  std::string failure_reason;  // empty on success
};

// Central-difference gradient with one-sided fallback where an evaluation
// returns a non-finite value. f_x is f(x) (reused by the fallback).
Eigen::VectorXd fd_gradient(const Objective& f, const Eigen::VectorXd& x, double f_x,
                            const OptSchedule& sched, long* n_evals);

// Non-finite objective values act as line-search rejections, not hard errors.
FitResult minimize(const Objective& f, const Eigen::VectorXd& theta0, const OptSchedule& sched);

}  // namespace pearsonsde
