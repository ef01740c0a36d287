#include "s4bell/setup.hpp"

#include "s4bell/errors.hpp"
#include "s4bell/reference_data.hpp"

namespace s4bell {

namespace {

S4Setup assemble(const Eigen::Vector3d& seed, bool reference_labels) {
  GroupTable group = symmetric_group(4);
  Representation standard = build_standard_rep(group);
  Representation twisted = alternating_twist(standard);
  Representation product = tensor_product(standard, standard);
  IsotypicDecomposition decomposition = isotypic_projectors(standard, product);
  Orbit orbit = generate_orbit(standard, seed);
  if (reference_labels) orbit = match_reference_labels(orbit);
  return {std::move(group), std::move(standard), std::move(twisted), std::move(product), std::move(decomposition),
          std::move(orbit)};
}

}  // namespace

S4Setup make_setup() { return assemble(reference::orbit_seed(), true); }

S4Setup make_setup(const Eigen::Vector3d& seed) {
  if (seed.norm() == 0.0) throw Error("seed vector must be nonzero");
  return assemble(seed.normalized(), false);
}

}  // namespace s4bell
