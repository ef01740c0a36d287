#include "s4bell/isotypic.hpp"

#include <cmath>

#include "s4bell/errors.hpp"
#include "s4bell/reference_data.hpp"
#include "s4bell/tolerance.hpp"

namespace s4bell {

std::string_view irrep_name(Irrep irrep) {
  switch (irrep) {
    case Irrep::Standard: return "D";
    case Irrep::TwistedStandard: return "D~";
    case Irrep::Two: return "D2";
    case Irrep::Scalar: return "D0";
  }
  return "?";
}

int irrep_dim(Irrep irrep) {
  switch (irrep) {
    case Irrep::Standard:
    case Irrep::TwistedStandard: return 3;
    case Irrep::Two: return 2;
    case Irrep::Scalar: return 1;
  }
  return 0;
}

const IsotypicComponent& IsotypicDecomposition::component(Irrep irrep) const {
  for (const auto& c : components_)
    if (c.irrep == irrep) return c;
  throw Error("no isotypic component " + std::string(irrep_name(irrep)));
}

IsotypicDecomposition isotypic_projectors(const Representation& standard, const Representation& product) {
  const GroupTable& group = standard.group();
  if (standard.dim() != 3 || product.dim() != 9)
    throw DecompositionFailure("expected a 3-dim representation and its 9-dim tensor square");

  const ClassFunction chi_d = character(standard);
  const ClassFunction chi_twisted = character(alternating_twist(standard));
  const ClassFunction chi_product = character(product);

  ClassFunction chi_two;
  ClassFunction chi_scalar;
  for (const auto& [type, value] : chi_d) {
    chi_two[type] = chi_product.at(type) - value - chi_twisted.at(type) - 1.0;
    chi_scalar[type] = 1.0;
  }

  const double order = static_cast<double>(group.order());
  std::vector<IsotypicComponent> components;
  for (Irrep irrep : kTensorSquareIrreps) {
    const ClassFunction& chi = irrep == Irrep::Standard          ? chi_d
                               : irrep == Irrep::TwistedStandard ? chi_twisted
                               : irrep == Irrep::Two             ? chi_two
                                                                 : chi_scalar;
    const int d = irrep_dim(irrep);
    Eigen::MatrixXd projector = Eigen::MatrixXd::Zero(9, 9);
    for (std::size_t g = 0; g < group.order(); ++g) projector += chi.at(cycle_type(group[g])) * product(g);
    projector *= d / order;

    const double trace = projector.trace();
    const double multiplicity = trace / d;
    if (std::abs(multiplicity - std::round(multiplicity)) > tol::kMatrix || std::round(multiplicity) != 1.0)
      throw DecompositionFailure("component " + std::string(irrep_name(irrep)) + " has trace " +
                                 std::to_string(trace) + ", expected " + std::to_string(d));
    components.push_back({irrep, d, 1, chi, std::move(projector)});
  }
  return IsotypicDecomposition(std::move(components));
}

BasisValidation validate_against_reference_basis(const IsotypicDecomposition& decomposition) {
  const Eigen::MatrixXd c = reference::change_of_basis();
  BasisValidation report;
  report.orthogonality_defect = max_abs_diff(c * c.transpose(), Eigen::MatrixXd::Identity(9, 9));

  int offset = 0;
  for (std::size_t s = 0; s < kTensorSquareIrreps.size(); ++s) {
    const int block = reference::kBlockDims[s];
    Eigen::MatrixXd indicator = Eigen::MatrixXd::Zero(9, 9);
    indicator.block(offset, offset, block, block).setIdentity();
    const Eigen::MatrixXd rotated = c * decomposition.component(kTensorSquareIrreps[s]).projector * c.transpose();
    report.block_defect[s] = max_abs_diff(rotated, indicator);
    report.block_trace[s] = rotated.block(offset, offset, block, block).trace();
    offset += block;
  }

  if (report.orthogonality_defect > tol::kMatrix)
    throw FixtureMismatch("change-of-basis matrix is not orthogonal (defect " +
                          std::to_string(report.orthogonality_defect) + ")");
  for (std::size_t s = 0; s < report.block_defect.size(); ++s)
    if (report.block_defect[s] > tol::kMatrix)
      throw FixtureMismatch("change-of-basis block " + std::string(irrep_name(kTensorSquareIrreps[s])) +
                            " deviates by " + std::to_string(report.block_defect[s]));
  return report;
}

}  // namespace s4bell
