#pragma once

#include <vector>

#include <Eigen/Dense>

namespace s4bell {

struct SymmetricEigen {
  /// Descending.
  std::vector<double> values;
  /// Column k is the unit eigenvector of values[k].
  Eigen::MatrixXd vectors;
  int sweeps = 0;
};

/// Cyclic Jacobi diagonalization of a real symmetric matrix. Stops once the off-diagonal
/// Frobenius norm drops below tol::kJacobiOffDiagonal (scaled by the matrix norm when that
/// exceeds 1). Throws NotSymmetric if |A - A^T| > tol::kMatrix anywhere, and Error if the
/// sweep cap is hit.
SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& a);

}  // namespace s4bell
