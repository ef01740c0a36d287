#include "s4bell/representation.hpp"

#include <cmath>

#include "s4bell/errors.hpp"
#include "s4bell/reference_data.hpp"
#include "s4bell/tolerance.hpp"

namespace s4bell {

Representation::Representation(GroupTable group, std::vector<Eigen::MatrixXd> matrices)
    : group_(std::move(group)), matrices_(std::move(matrices)) {
  if (matrices_.size() != group_.order())
    throw RepresentationCorrupt("expected " + std::to_string(group_.order()) + " matrices, got " +
                                std::to_string(matrices_.size()));
  const auto d = matrices_.front().rows();
  for (const auto& m : matrices_)
    if (m.rows() != d || m.cols() != d) throw RepresentationCorrupt("representation matrices must be square of equal size");
}

double Representation::homomorphism_defect() const {
  double worst = 0.0;
  for (std::size_t g = 0; g < group_.order(); ++g)
    for (std::size_t h = 0; h < group_.order(); ++h)
      worst = std::max(worst, max_abs_diff(matrices_[g] * matrices_[h], matrices_[group_.product_index(g, h)]));
  return worst;
}

double Representation::orthogonality_defect() const {
  double worst = 0.0;
  const auto identity = Eigen::MatrixXd::Identity(dim(), dim());
  for (const auto& m : matrices_) worst = std::max(worst, max_abs_diff(m.transpose() * m, identity));
  return worst;
}

Representation trivial_rep(const GroupTable& group) {
  return Representation(group, std::vector<Eigen::MatrixXd>(group.order(), Eigen::MatrixXd::Ones(1, 1)));
}

Representation build_standard_rep(const GroupTable& group) {
  if (group.degree() != 4 || group.order() != 24)
    throw Error("the standard representation is bundled for S4 only");

  std::vector<Eigen::MatrixXd> matrices;
  matrices.reserve(group.order());
  for (const auto& g : group.elements()) {
    Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
    for (int k : adjacent_transposition_word(g)) m = m * reference::transposition_matrix(k + 1, k + 2);
    Permutation check = Permutation::identity(4);
    for (int k : adjacent_transposition_word(g)) check = compose(check, Permutation::transposition(4, k, k + 1));
    if (check != g) throw InternalError("adjacent-transposition factorization failed for " + g.to_cycle_string());
    matrices.emplace_back(m);
  }
  return Representation(group, std::move(matrices));
}

Representation alternating_twist(const Representation& rep) {
  std::vector<Eigen::MatrixXd> matrices;
  matrices.reserve(rep.group().order());
  for (std::size_t g = 0; g < rep.group().order(); ++g)
    matrices.push_back(static_cast<double>(sign(rep.group()[g])) * rep(g));
  return Representation(rep.group(), std::move(matrices));
}

Representation tensor_product(const Representation& a, const Representation& b) {
  if (a.group().elements() != b.group().elements())
    throw RepresentationCorrupt("tensor product of representations of different groups");
  std::vector<Eigen::MatrixXd> matrices;
  matrices.reserve(a.group().order());
  for (std::size_t g = 0; g < a.group().order(); ++g) matrices.push_back(kron(a(g), b(g)));
  return Representation(a.group(), std::move(matrices));
}

ClassFunction character(const Representation& rep) {
  ClassFunction chi;
  for (std::size_t g = 0; g < rep.group().order(); ++g) {
    const double trace = rep(g).trace();
    auto [it, inserted] = chi.emplace(cycle_type(rep.group()[g]), trace);
    if (!inserted && std::abs(it->second - trace) > tol::kMatrix)
      throw RepresentationCorrupt("character is not a class function at " + rep.group()[g].to_cycle_string());
  }
  return chi;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace s4bell
