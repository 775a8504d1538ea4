#pragma once

#include <Eigen/Dense>

namespace pearsonsde {

// Dense matrix exponential: scaling and squaring with a degree-13 Pade
// approximant. Sized for the small systems used here (n up to a few dozen).
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

// a kron I_m + I_n kron b for a (n x n), b (m x m).
Eigen::MatrixXd kron_sum(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

// Column-major stacking and its inverse.
Eigen::VectorXd vec(const Eigen::MatrixXd& a);
Eigen::MatrixXd unvec(const Eigen::VectorXd& v, int rows, int cols);

// int_0^t exp(f (t-s)) g exp(h s) ds, read off the top-right block of the
// exponential of the block-triangular matrix [[f, g], [0, h]] t.
// f is n x n, g is n x m, h is m x m.
Eigen::MatrixXd van_loan_integral(const Eigen::MatrixXd& f,
                                  const Eigen::MatrixXd& g,
                                  const Eigen::MatrixXd& h, double t);

struct ExpIntegrals {
  Eigen::MatrixXd e;   // exp(j h)
  Eigen::MatrixXd r0;  // int_0^h exp(j u) du
  Eigen::MatrixXd w;   // int_0^h exp(j u) (h - u) du
};

// All three blocks from one exponential of a 3n x 3n triangular matrix.
ExpIntegrals exp_integrals(const Eigen::MatrixXd& j, double h);

}  // namespace pearsonsde
