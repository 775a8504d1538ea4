#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "pearsonsde/models.hpp"
#include "pearsonsde/sim.hpp"

namespace pearsonsde {

struct ObservationSet {
  double h = 0.0;
  int d = 0;
  Eigen::MatrixXd states;  // N + 1 rows

  long n_transitions() const { return states.rows() - 1; }
  static ObservationSet from_path(const Path& p) { return {p.h, p.d, p.states}; }
};

// True when every state is strictly inside the open simplex
// {x_i > margin, sum x < 1 - margin}; Wright-Fisher objectives require this.
bool wf_strictly_interior(const ObservationSet& obs, double margin = 0.0);

enum class ObjectiveStatus { ok, indefinite_covariance, flow_failure, invalid_input };

const char* to_string(ObjectiveStatus s);

struct ObjectiveValue {
  double value = std::numeric_limits<double>::infinity();
  Eigen::VectorXd per_transition;
  ObjectiveStatus status = ObjectiveStatus::ok;
  long first_bad = -1;  // transition index of the first failure, if any
};

// One RK4 step of x' = N(x) over h (h may be negative for the backward flow).
Eigen::VectorXd rk4_flow(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& N,
                         double h, const Eigen::VectorXd& x);
// Same step with the Jacobian propagated through the stages.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> rk4_flow_jacobian(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& N,
    const std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>& DN,
    double h, const Eigen::VectorXd& x);

// Everything an objective needs about a model at one parameter point.
struct ParametricModel {
  int d = 0;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> drift;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> drift_jacobian;
  std::function<std::vector<Eigen::MatrixXd>(const Eigen::VectorXd&)> drift_hessians;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> sigma2;
  std::optional<SplitNonlinearModel> split;  // required by ss_objective
  std::optional<SkParams> sk;                // set for the oscillator family
};

// All objectives drop the d log(2pi) constant per transition; they are
// 2x the negative log-likelihood up to that constant.
ObjectiveValue ss_objective(const ParametricModel& m, const ObservationSet& obs);
ObjectiveValue em_objective(const ParametricModel& m, const ObservationSet& obs);
ObjectiveValue ga_objective(const ParametricModel& m, const ObservationSet& obs, int order = 2);
ObjectiveValue ll_objective(const ParametricModel& m, const ObservationSet& obs);
ObjectiveValue ll_objective_sk_lamperti(const SkParams& p, const ObservationSet& obs);

// Forward differences (X_{k+1} - X_k)/h paired with X_k; the final sample is
// dropped. Input must be scalar positions.
ObservationSet impute_velocity(const ObservationSet& positions);

// Families: theta -> evaluated model. Splitting centers come from data
// moments and stay fixed across theta.
ParametricModel wf_parametric(const Eigen::VectorXd& theta15, const Eigen::Vector3d& split_b);
ParametricModel sk_parametric(const Eigen::VectorXd& theta8, double mean_x, double second_moment_x);
ParametricModel ou_parametric(const Eigen::VectorXd& theta3);  // (lambda, mean, sigma)

}  // namespace pearsonsde
