#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "s4bell/representation.hpp"

namespace s4bell {

/// Addresses x_alpha^i in a labeled orbit: basis i is 1-based (1..8), outcome alpha is 0..2.
struct OrbitLabel {
  int basis = 1;
  int outcome = 0;

  auto operator<=>(const OrbitLabel&) const = default;
};

/// "x<alpha><i>", e.g. x01 for x_0^1.
std::string to_string(const OrbitLabel& label);

/// One orbit pair (phi_n, psi_n) given as labels into the same labeled orbit.
struct OrbitPairSpec {
  OrbitLabel phi;
  OrbitLabel psi;

  auto operator<=>(const OrbitPairSpec&) const = default;
};

struct OrbitVector {
  Eigen::Vector3d coords;
  /// Index of the group element g with coords = D(g) seed.
  std::size_t element = 0;
  OrbitLabel label;
};

using Triple = std::array<std::size_t, 3>;

/// Result of the exact-cover search.
struct BasisPartition {
  std::vector<Triple> triples;
  /// Number of distinct exact covers found; 1 means the partition is unique.
  std::size_t cover_count = 0;
};

/// A generic orbit split into orthonormal triples. Vector i carries label (basis, outcome);
/// triples()[basis - 1][outcome] is its index.
class Orbit {
 public:
  Orbit(Eigen::Vector3d seed, std::vector<OrbitVector> vectors, std::vector<Triple> triples, std::size_t cover_count);

  const Eigen::Vector3d& seed() const { return seed_; }
  const std::vector<OrbitVector>& vectors() const { return vectors_; }
  const std::vector<Triple>& triples() const { return triples_; }
  std::size_t cover_count() const { return cover_count_; }
  int bases() const { return static_cast<int>(triples_.size()); }

  const OrbitVector& at(const OrbitLabel& label) const;
  /// Index of the vector within tol::kVectorMatch of `v`, if any.
  std::optional<std::size_t> find(const Eigen::Vector3d& v) const;
  /// Label of the vector matching `v`; throws InternalError on a miss.
  OrbitLabel label_of(const Eigen::Vector3d& v) const;

 private:
  Eigen::Vector3d seed_;
  std::vector<OrbitVector> vectors_;
  std::vector<Triple> triples_;
  std::size_t cover_count_ = 0;
};

/// Distinct points of {D(g) seed}, each tagged with the smallest element index reaching it,
/// ordered by that index.
std::vector<OrbitVector> orbit_points(const Representation& rep, const Eigen::Vector3d& seed);

/// Orbit of a unit seed under a 3-dim representation, partitioned into orthonormal triples.
/// Triples are ordered by their smallest element index and labeled basis 1, 2, ... with
/// outcomes in element order. Throws DegenerateOrbit when fewer than |G| points exist and
/// PartitionFailure when no exact cover exists.
Orbit generate_orbit(const Representation& rep, const Eigen::Vector3d& seed);

/// Exact cover of `vectors` by mutually orthogonal triples (|<u, v>| < tol::kMatrix).
/// Lowest-index-first search; returns the lexicographically first cover and the cover count.
BasisPartition partition_into_bases(std::span<const Eigen::Vector3d> vectors);

/// Relabels an orbit with the bundled reference table x_alpha^i. Throws FixtureMismatch if
/// any vector is unmatched or matched twice.
Orbit match_reference_labels(const Orbit& orbit);

/// Orbit of (1, 0, 0): the four tetrahedron vertices.
std::vector<Eigen::Vector3d> tetrahedron_orbit(const Representation& rep);

}  // namespace s4bell
