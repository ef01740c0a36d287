#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "s4bell/representation.hpp"

namespace s4bell {

/// Irreducible constituents of D (x) D for the S4 standard representation, in the
/// order D + D~ + D2 + D0.
enum class Irrep { Standard, TwistedStandard, Two, Scalar };

inline constexpr std::array<Irrep, 4> kTensorSquareIrreps{Irrep::Standard, Irrep::TwistedStandard, Irrep::Two,
                                                          Irrep::Scalar};

/// "D", "D~", "D2", "D0".
std::string_view irrep_name(Irrep irrep);
int irrep_dim(Irrep irrep);

struct IsotypicComponent {
  Irrep irrep;
  int dim = 0;
  int multiplicity = 0;
  ClassFunction character;
  /// Orthogonal projector onto the component inside the 9-dim product space.
  Eigen::MatrixXd projector;
};

class IsotypicDecomposition {
 public:
  explicit IsotypicDecomposition(std::vector<IsotypicComponent> components) : components_(std::move(components)) {}

  const std::vector<IsotypicComponent>& components() const { return components_; }
  const IsotypicComponent& component(Irrep irrep) const;

 private:
  std::vector<IsotypicComponent> components_;
};

/// Projectors P_s = (d_s / |G|) sum_g chi_s(g) (D(x)D)(g). chi_D and chi_D~ come from the
/// traces of `standard` and its twist; chi_D2 = chi_D^2 - chi_D - chi_D~ - 1.
/// Throws DecompositionFailure if the traces are not 3, 3, 2, 1.
IsotypicDecomposition isotypic_projectors(const Representation& standard, const Representation& product);

/// Per-component deviations found by validate_against_reference_basis.
struct BasisValidation {
  double orthogonality_defect = 0.0;
  /// max entrywise |C P_s C^T - E_s| where E_s is the diagonal indicator of block s.
  std::array<double, 4> block_defect{};
  std::array<double, 4> block_trace{};
};

/// Checks the bundled change-of-basis matrix C against the projectors: C is orthogonal
/// and C P_s C^T is the indicator of the s-th diagonal block (rows grouped 3+3+2+1).
/// Throws FixtureMismatch beyond tol::kMatrix.
BasisValidation validate_against_reference_basis(const IsotypicDecomposition& decomposition);

}  // namespace s4bell
