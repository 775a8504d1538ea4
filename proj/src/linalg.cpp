#include "pearsonsde/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace pearsonsde {

using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd expm(const MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: matrix must be square");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return a;

  // Degree-13 Pade with scaling chosen so the scaled 1-norm stays below the
  // backward-stability threshold for this order.
  static constexpr double theta13 = 5.371920351148152;
  static constexpr double b[14] = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};

  const double nrm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  MatrixXd as = a;
  if (nrm > theta13) {
    squarings = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
    as /= std::exp2(static_cast<double>(squarings));
  }

  const MatrixXd eye = MatrixXd::Identity(n, n);
  const MatrixXd a2 = as * as;
  const MatrixXd a4 = a2 * a2;
  const MatrixXd a6 = a2 * a4;
  const MatrixXd u =
      as * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * eye);
  const MatrixXd v =
      a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * eye;

  MatrixXd r = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) r = r * r;
  return r;
}

MatrixXd kron(const MatrixXd& a, const MatrixXd& b) {
  MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

MatrixXd kron_sum(const MatrixXd& a, const MatrixXd& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw std::invalid_argument("kron_sum: both operands must be square");
  return kron(a, MatrixXd::Identity(b.rows(), b.rows())) +
         kron(MatrixXd::Identity(a.rows(), a.rows()), b);
}

VectorXd vec(const MatrixXd& a) {
  return Eigen::Map<const VectorXd>(a.data(), a.size());
}

MatrixXd unvec(const VectorXd& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols)
    throw std::invalid_argument("unvec: size mismatch");
  return Eigen::Map<const MatrixXd>(v.data(), rows, cols);
}

MatrixXd van_loan_integral(const MatrixXd& f, const MatrixXd& g, const MatrixXd& h, double t) {
  const int n = static_cast<int>(f.rows());
  const int m = static_cast<int>(h.rows());
  if (f.cols() != n || h.cols() != m || g.rows() != n || g.cols() != m)
    throw std::invalid_argument("van_loan_integral: inconsistent block shapes");
  MatrixXd block = MatrixXd::Zero(n + m, n + m);
  block.topLeftCorner(n, n) = f;
  block.topRightCorner(n, m) = g;
  block.bottomRightCorner(m, m) = h;
  return expm((block * t).eval()).topRightCorner(n, m);
}

ExpIntegrals exp_integrals(const MatrixXd& j, double h) {
  const int n = static_cast<int>(j.rows());
  if (j.cols() != n) throw std::invalid_argument("exp_integrals: matrix must be square");
  MatrixXd block = MatrixXd::Zero(3 * n, 3 * n);
  block.topLeftCorner(n, n) = j;
  block.block(0, n, n, n) = MatrixXd::Identity(n, n);
  block.block(n, 2 * n, n, n) = MatrixXd::Identity(n, n);
  const MatrixXd e = expm((block * h).eval());
  ExpIntegrals out;
  out.e = e.topLeftCorner(n, n);
  out.r0 = e.block(0, n, n, n);
  out.w = e.block(0, 2 * n, n, n);
  return out;
}

}  // namespace pearsonsde
