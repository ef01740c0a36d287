#include "s4bell/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "s4bell/errors.hpp"
#include "s4bell/reference_data.hpp"
#include "s4bell/tolerance.hpp"

namespace s4bell {

std::string to_string(const OrbitLabel& label) {
  return "x" + std::to_string(label.outcome) + std::to_string(label.basis);
}

Orbit::Orbit(Eigen::Vector3d seed, std::vector<OrbitVector> vectors, std::vector<Triple> triples,
             std::size_t cover_count)
    : seed_(std::move(seed)), vectors_(std::move(vectors)), triples_(std::move(triples)), cover_count_(cover_count) {}

const OrbitVector& Orbit::at(const OrbitLabel& label) const {
  if (label.basis < 1 || label.basis > bases() || label.outcome < 0 || label.outcome > 2)
    throw Error("orbit label out of range: " + to_string(label));
  return vectors_[triples_[static_cast<std::size_t>(label.basis - 1)][static_cast<std::size_t>(label.outcome)]];
}

std::optional<std::size_t> Orbit::find(const Eigen::Vector3d& v) const {
  for (std::size_t k = 0; k < vectors_.size(); ++k)
    if ((vectors_[k].coords - v).norm() < tol::kVectorMatch) return k;
  return std::nullopt;
}

OrbitLabel Orbit::label_of(const Eigen::Vector3d& v) const {
  const auto k = find(v);
  if (!k) throw InternalError("vector is not a point of the orbit");
  return vectors_[*k].label;
}

std::vector<OrbitVector> orbit_points(const Representation& rep, const Eigen::Vector3d& seed) {
  if (rep.dim() != 3) throw Error("orbits are defined for 3-dim representations");
  std::vector<OrbitVector> points;
  for (std::size_t g = 0; g < rep.group().order(); ++g) {
    const Eigen::Vector3d v = rep(g) * seed;
    const bool seen = std::any_of(points.begin(), points.end(),
                                  [&](const OrbitVector& p) { return (p.coords - v).norm() < tol::kVectorMatch; });
    if (!seen) points.push_back({v, g, {}});
  }
  return points;
}

Orbit generate_orbit(const Representation& rep, const Eigen::Vector3d& seed) {
  if (std::abs(seed.norm() - 1.0) > tol::kMatrix) throw Error("orbit seed must be a unit vector");
  std::vector<OrbitVector> points = orbit_points(rep, seed);
  if (points.size() != rep.group().order()) throw DegenerateOrbit(points.size());

  std::vector<Eigen::Vector3d> coords;
  coords.reserve(points.size());
  for (const auto& p : points) coords.push_back(p.coords);
  BasisPartition partition = partition_into_bases(coords);

  // Points are already in element order, so the canonical triple order is index order.
  for (std::size_t t = 0; t < partition.triples.size(); ++t)
    for (std::size_t a = 0; a < 3; ++a)
      points[partition.triples[t][a]].label = {static_cast<int>(t) + 1, static_cast<int>(a)};
  return Orbit(seed, std::move(points), std::move(partition.triples), partition.cover_count);
}

BasisPartition partition_into_bases(std::span<const Eigen::Vector3d> vectors) {
  const std::size_t n = vectors.size();
  if (n % 3 != 0) throw PartitionFailure(std::to_string(n) + " vectors cannot be split into triples");

  std::vector<std::vector<bool>> orthogonal(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      orthogonal[i][j] = orthogonal[j][i] = std::abs(vectors[i].dot(vectors[j])) < tol::kMatrix;

  BasisPartition result;
  std::vector<bool> used(n, false);
  std::vector<Triple> current;

  // Lowest free index must be in the next triple; the first cover reached is the lexicographically first.
  std::function<void()> search = [&] {
    auto first = std::find(used.begin(), used.end(), false);
    if (first == used.end()) {
      if (result.cover_count++ == 0) result.triples = current;
      return;
    }
    const std::size_t i = static_cast<std::size_t>(first - used.begin());
    used[i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (used[j] || !orthogonal[i][j]) continue;
      used[j] = true;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (used[k] || !orthogonal[i][k] || !orthogonal[j][k]) continue;
        used[k] = true;
        current.push_back({i, j, k});
        search();
        current.pop_back();
        used[k] = false;
      }
      used[j] = false;
    }
    used[i] = false;
  };
  search();

  if (result.cover_count == 0) throw PartitionFailure("no partition into orthonormal triples exists");
  return result;
}

Orbit match_reference_labels(const Orbit& orbit) {
  std::vector<OrbitVector> vectors = orbit.vectors();
  std::vector<Triple> triples(8);
  std::vector<std::vector<bool>> taken(8, std::vector<bool>(3, false));
  if (vectors.size() != 24) throw FixtureMismatch("reference table has 24 vectors, orbit has " + std::to_string(vectors.size()));

  for (std::size_t k = 0; k < vectors.size(); ++k) {
    std::optional<OrbitLabel> match;
    for (int i = 1; i <= 8; ++i) {
      for (int a = 0; a < 3; ++a) {
        const OrbitLabel label{i, a};
        if ((reference::orbit_vector(label) - vectors[k].coords).norm() >= tol::kVectorMatch) continue;
        if (match) throw FixtureMismatch("orbit vector matches two reference labels");
        match = label;
      }
    }
    if (!match) throw FixtureMismatch("orbit vector has no reference label");
    auto slot = taken[static_cast<std::size_t>(match->basis - 1)][static_cast<std::size_t>(match->outcome)];
    if (slot) throw FixtureMismatch("reference label " + to_string(*match) + " matched twice");
    slot = true;
    vectors[k].label = *match;
    triples[static_cast<std::size_t>(match->basis - 1)][static_cast<std::size_t>(match->outcome)] = k;
  }

  auto sorted = [](Triple t) {
    std::sort(t.begin(), t.end());
    return t;
  };
  std::vector<Triple> computed;
  for (const auto& t : orbit.triples()) computed.push_back(sorted(t));
  for (const auto& t : triples)
    if (std::find(computed.begin(), computed.end(), sorted(t)) == computed.end())
      throw FixtureMismatch("reference basis grouping differs from the computed partition");
  return Orbit(orbit.seed(), std::move(vectors), std::move(triples), orbit.cover_count());
}

std::vector<Eigen::Vector3d> tetrahedron_orbit(const Representation& rep) {
  std::vector<Eigen::Vector3d> out;
  for (const auto& p : orbit_points(rep, Eigen::Vector3d(1, 0, 0))) out.push_back(p.coords);
  return out;
}

}  // namespace s4bell
