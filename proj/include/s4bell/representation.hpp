#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "s4bell/group_table.hpp"

namespace s4bell {

/// Real class function keyed by cycle type.
using ClassFunction = std::map<CycleType, double>;

/// A real matrix representation g -> D(g), indexed like the group's element list.
class Representation {
 public:
  /// Throws RepresentationCorrupt if the matrix count or shapes do not fit the group.
  Representation(GroupTable group, std::vector<Eigen::MatrixXd> matrices);

  const GroupTable& group() const { return group_; }
  int dim() const { return static_cast<int>(matrices_.front().rows()); }
  const Eigen::MatrixXd& operator()(std::size_t element) const { return matrices_[element]; }
  const Eigen::MatrixXd& operator()(const Permutation& g) const { return matrices_[group_.index_of(g)]; }
  const std::vector<Eigen::MatrixXd>& matrices() const { return matrices_; }

  /// max over all pairs (g, h) of ||D(g) D(h) - D(gh)||_inf (entrywise).
  double homomorphism_defect() const;
  /// max over g of ||D(g)^T D(g) - I||_inf (entrywise).
  double orthogonality_defect() const;

 private:
  GroupTable group_;
  std::vector<Eigen::MatrixXd> matrices_;
};

/// The one-dimensional trivial representation.
Representation trivial_rep(const GroupTable& group);

/// The three-dimensional standard representation of S4, assembled from the bundled
/// adjacent-transposition matrices by factoring each element into adjacent transpositions.
Representation build_standard_rep(const GroupTable& group);

/// g -> sign(g) D(g).
Representation alternating_twist(const Representation& rep);

/// g -> A(g) (x) B(g), Kronecker product with index 3*i + j for (i, j).
Representation tensor_product(const Representation& a, const Representation& b);

/// chi(g) = tr D(g) per cycle type. Throws RepresentationCorrupt if chi varies within a class.
ClassFunction character(const Representation& rep);

/// Kronecker product of two dense matrices or vectors.
Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Entrywise max |a - b|.
double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace s4bell
