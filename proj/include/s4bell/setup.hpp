#pragma once

#include <Eigen/Dense>

#include "s4bell/group_table.hpp"
#include "s4bell/isotypic.hpp"
#include "s4bell/orbit.hpp"
#include "s4bell/representation.hpp"

namespace s4bell {

/// Everything derived from S4 that the bounds need. Immutable once built.
struct S4Setup {
  GroupTable group;
  Representation standard;
  Representation twisted;
  Representation product;
  IsotypicDecomposition decomposition;
  Orbit orbit;
};

/// S4 with the orbit of x_0^1 carrying the reference labels x_alpha^i.
S4Setup make_setup();

/// S4 with the orbit of `seed` (normalized first) carrying canonical labels.
/// Propagates DegenerateOrbit and PartitionFailure.
S4Setup make_setup(const Eigen::Vector3d& seed);

}  // namespace s4bell
