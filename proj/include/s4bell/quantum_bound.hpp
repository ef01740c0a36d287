#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "s4bell/isotypic.hpp"
#include "s4bell/orbit.hpp"
#include "s4bell/representation.hpp"

namespace s4bell {

/// X = sum_n sum_g (D(g)phi_n (x) D(g)psi_n)(...)^T on the 9-dim product space.
class XOperator {
 public:
  XOperator() : matrix_(Eigen::MatrixXd::Zero(9, 9)) {}
  XOperator(Eigen::MatrixXd matrix, int orbit_count, std::vector<OrbitPairSpec> pairs = {})
      : matrix_(std::move(matrix)), orbit_count_(orbit_count), pairs_(std::move(pairs)) {}

  const Eigen::MatrixXd& matrix() const { return matrix_; }
  /// Number of single-orbit operators summed; the trace equals |G| times this.
  int orbit_count() const { return orbit_count_; }
  const std::vector<OrbitPairSpec>& pairs() const { return pairs_; }

  XOperator& operator+=(const XOperator& other);

 private:
  Eigen::MatrixXd matrix_;
  int orbit_count_ = 0;
  std::vector<OrbitPairSpec> pairs_;
};

XOperator build_x(const Eigen::Vector3d& phi, const Eigen::Vector3d& psi, const Representation& product);

struct IsotypicEigenvalue {
  Irrep irrep;
  int dim;
  double value;
};

/// (|G| / d_s) ||P_s (phi (x) psi)||^2 for each component, in the order D, D~, D2, D0.
std::vector<IsotypicEigenvalue> eigenvalues_isotypic(const Eigen::Vector3d& phi, const Eigen::Vector3d& psi,
                                                     const IsotypicDecomposition& decomposition,
                                                     std::size_t group_order = 24);

struct DirectSpectrum {
  /// All eigenvalues with multiplicity, descending.
  std::vector<double> values;
  Eigen::VectorXd top_vector;
};

/// Jacobi diagonalization of X.
DirectSpectrum eigenvalues_direct(const XOperator& x);

struct PairAnalysis {
  OrbitPairSpec pair;
  std::vector<IsotypicEigenvalue> isotypic;
  /// <v_max | X_n | v_max> for the summed maximal eigenvector.
  double contribution = 0.0;
};

struct QuantumBound {
  double lambda_max = 0.0;
  Eigen::VectorXd eigenvector;
  std::vector<double> spectrum;
  std::vector<PairAnalysis> pairs;
  XOperator x;
};

/// Builds sum_n X(phi_n, psi_n) from labels into `orbit`, diagonalizes it directly, and
/// cross-checks that the direct spectrum equals the per-component sums of the isotypic
/// eigenvalues (each repeated d_s times) to tol::kEigenvalue; throws InternalError otherwise.
QuantumBound max_eigenvalue_sum(std::span<const OrbitPairSpec> pairs, const Orbit& orbit,
                                const Representation& product, const IsotypicDecomposition& decomposition);

}  // namespace s4bell
