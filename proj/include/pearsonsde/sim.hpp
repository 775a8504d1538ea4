#pragma once

#include <cstdint>
#include <functional>

#include "pearsonsde/models.hpp"
#include "pearsonsde/rng.hpp"

namespace pearsonsde {

struct SimConfig {
  double h_sim = 1e-4;
  long n_steps = 0;
  std::uint64_t seed = 0;
  Eigen::VectorXd x0;
};

struct Path {
  double h = 0.0;
  int d = 0;
  Eigen::MatrixXd states;  // (n_steps + 1) x d, row k holds X_{k h}

  long n_states() const { return states.rows(); }
};

// Generic Euler-Maruyama; the caller supplies a matrix square root of
// SigmaSigma^T (lower factor), which may depend on the state.
Path euler_maruyama(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& drift,
                    const std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>& sigma_factor,
                    const SimConfig& cfg);

// Wright-Fisher via six pairwise noises, which keeps the scheme inside the
// simplex up to clamping at distance eps from the boundary.
Path simulate_wf(const WfParams& p, const SimConfig& cfg, double eps = 1e-9);

// Kramers oscillator: exact position update, Milstein correction on velocity.
Path simulate_sk_milstein(const SkParams& p, const SimConfig& cfg);

// Keep every factor-th state starting at index 0; h scales by factor.
Path subsample(const Path& fine, int factor);

}  // namespace pearsonsde
