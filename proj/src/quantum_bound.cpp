#include "s4bell/quantum_bound.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "s4bell/errors.hpp"
#include "s4bell/jacobi.hpp"
#include "s4bell/tolerance.hpp"

namespace s4bell {

XOperator& XOperator::operator+=(const XOperator& other) {
  matrix_ += other.matrix_;
  orbit_count_ += other.orbit_count_;
  pairs_.insert(pairs_.end(), other.pairs_.begin(), other.pairs_.end());
  return *this;
}

XOperator build_x(const Eigen::Vector3d& phi, const Eigen::Vector3d& psi, const Representation& product) {
  const Eigen::VectorXd seed = kron(phi, psi);
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(9, 9);
  for (const auto& m : product.matrices()) {
    const Eigen::VectorXd w = m * seed;
    x += w * w.transpose();
  }
  return XOperator(std::move(x), 1);
}

std::vector<IsotypicEigenvalue> eigenvalues_isotypic(const Eigen::Vector3d& phi, const Eigen::Vector3d& psi,
                                                     const IsotypicDecomposition& decomposition,
                                                     std::size_t group_order) {
  const Eigen::VectorXd v = kron(phi, psi);
  std::vector<IsotypicEigenvalue> out;
  for (const auto& c : decomposition.components()) {
    const double norm2 = (c.projector * v).squaredNorm();
    out.push_back({c.irrep, c.dim, static_cast<double>(group_order) / c.dim * norm2});
  }
  return out;
}

DirectSpectrum eigenvalues_direct(const XOperator& x) {
  SymmetricEigen eig = jacobi_eigen(x.matrix());
  Eigen::VectorXd top = eig.vectors.col(0);
  // Fix the sign: first component that is clearly nonzero is positive.
  for (Eigen::Index k = 0; k < top.size(); ++k) {
    if (std::abs(top(k)) > 1e-9) {
      if (top(k) < 0) top = -top;
      break;
    }
  }
  return {std::move(eig.values), std::move(top)};
}

QuantumBound max_eigenvalue_sum(std::span<const OrbitPairSpec> pairs, const Orbit& orbit,
                                const Representation& product, const IsotypicDecomposition& decomposition) {
  if (pairs.empty()) throw Error("at least one orbit pair is required");

  QuantumBound bound;
  std::vector<XOperator> parts;
  std::vector<double> component_sums(decomposition.components().size(), 0.0);
  for (const auto& pair : pairs) {
    const Eigen::Vector3d& phi = orbit.at(pair.phi).coords;
    const Eigen::Vector3d& psi = orbit.at(pair.psi).coords;
    XOperator part = build_x(phi, psi, product);
    part = XOperator(part.matrix(), 1, {pair});
    bound.x += part;
    parts.push_back(std::move(part));

    PairAnalysis analysis{pair, eigenvalues_isotypic(phi, psi, decomposition, product.group().order()), 0.0};
    for (std::size_t s = 0; s < analysis.isotypic.size(); ++s) component_sums[s] += analysis.isotypic[s].value;
    bound.pairs.push_back(std::move(analysis));
  }

  DirectSpectrum direct = eigenvalues_direct(bound.x);
  bound.lambda_max = direct.values.front();
  bound.eigenvector = direct.top_vector;
  bound.spectrum = direct.values;

  std::vector<double> expected;
  for (std::size_t s = 0; s < component_sums.size(); ++s)
    expected.insert(expected.end(), static_cast<std::size_t>(decomposition.components()[s].dim), component_sums[s]);
  std::sort(expected.begin(), expected.end(), std::greater<>());
  for (std::size_t k = 0; k < expected.size(); ++k)
    if (std::abs(expected[k] - bound.spectrum[k]) > tol::kEigenvalue)
      throw InternalError("isotypic and direct spectra disagree at position " + std::to_string(k));

  for (std::size_t n = 0; n < parts.size(); ++n)
    bound.pairs[n].contribution = bound.eigenvector.dot(parts[n].matrix() * bound.eigenvector);
  return bound;
}

}  // namespace s4bell
