#include <doctest.h>

#include <cmath>

#include "s4bell/errors.hpp"
#include "s4bell/orbit.hpp"
#include "s4bell/reference_data.hpp"
#include "support.hpp"

using namespace s4bell;
using s4bell::testing::setup;

TEST_CASE("orbit of x01 reproduces the reference table") {
  const Orbit& orbit = setup().orbit;
  REQUIRE(orbit.vectors().size() == 24);
  REQUIRE(orbit.bases() == 8);
  CHECK(orbit.cover_count() == 1);
  for (int i = 1; i <= 8; ++i)
    for (int a = 0; a < 3; ++a) {
      const OrbitLabel label{i, a};
      CAPTURE(to_string(label));
      CHECK((orbit.at(label).coords - reference::orbit_vector(label)).cwiseAbs().maxCoeff() < 1e-9);
      CHECK(orbit.at(label).label == label);
    }
}

TEST_CASE("specific labels") {
  const double r = std::sqrt(3.0) / 3.0;
  CHECK(setup().orbit.label_of(Eigen::Vector3d(r, r, r)) == OrbitLabel{8, 2});
  CHECK(setup().orbit.label_of(Eigen::Vector3d(r, r, -r)) == OrbitLabel{1, 0});
  CHECK(to_string(OrbitLabel{4, 1}) == "x14");
  CHECK_THROWS_AS(setup().orbit.label_of(Eigen::Vector3d(1, 0, 0)), InternalError);
}

TEST_CASE("orbit invariants") {
  const Orbit& orbit = setup().orbit;
  for (const auto& v : orbit.vectors()) {
    CHECK(v.coords.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((setup().standard(v.element) * orbit.seed() - v.coords).norm() < 1e-9);
  }
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t j = i + 1; j < 24; ++j) CHECK((orbit.vectors()[i].coords - orbit.vectors()[j].coords).norm() > 0.1);
}

TEST_CASE("property: each basis resolves the identity") {
  for (int i = 1; i <= 8; ++i) {
    Eigen::Matrix3d sum = Eigen::Matrix3d::Zero();
    for (int a = 0; a < 3; ++a) {
      const auto& x = setup().orbit.at({i, a}).coords;
      sum += x * x.transpose();
      for (int b = 0; b < 3; ++b)
        CHECK(std::abs(x.dot(setup().orbit.at({i, b}).coords) - (a == b ? 1.0 : 0.0)) < 1e-9);
    }
    CHECK(max_abs_diff(sum, Eigen::Matrix3d::Identity()) < 1e-9);
  }
}

TEST_CASE("property: group covariance") {
  const auto& g = setup().group;
  for (std::size_t k = 0; k < g.order(); ++k)
    for (const auto& v : setup().orbit.vectors()) {
      const Eigen::Vector3d moved = setup().standard(k) * v.coords;
      const auto hit = setup().orbit.find(moved);
      REQUIRE(hit.has_value());
      CHECK(setup().orbit.vectors()[*hit].element == g.product_index(k, v.element));
    }
}

TEST_CASE("property: labeled dot products match the reference table") {
  for (int i = 1; i <= 8; ++i)
    for (int a = 0; a < 3; ++a)
      for (int j = 1; j <= 8; ++j)
        for (int b = 0; b < 3; ++b) {
          const double computed = setup().orbit.at({i, a}).coords.dot(setup().orbit.at({j, b}).coords);
          const double expected = reference::orbit_vector({i, a}).dot(reference::orbit_vector({j, b}));
          REQUIRE(std::abs(computed - expected) < 1e-9);
        }
}

TEST_CASE("degenerate tetrahedron seed") {
  try {
    generate_orbit(setup().standard, Eigen::Vector3d(1, 0, 0));
    FAIL("expected a degenerate orbit");
  } catch (const DegenerateOrbit& e) {
    CHECK(e.orbit_size() == 4);
  }
  CHECK_THROWS_AS(make_setup(Eigen::Vector3d(0, 0, 2)), DegenerateOrbit);
  CHECK_THROWS_AS(generate_orbit(setup().standard, Eigen::Vector3d(1, 1, 0)), Error);
}

TEST_CASE("tetrahedron orbit") {
  const auto vertices = tetrahedron_orbit(setup().standard);
  REQUIRE(vertices.size() == 4);
  auto contains = [&](const Eigen::Vector3d& v) {
    return std::any_of(vertices.begin(), vertices.end(), [&](const auto& w) { return (w - v).norm() < 1e-9; });
  };
  CHECK(contains(Eigen::Vector3d(1, 0, 0)));
  CHECK(contains(Eigen::Vector3d(-1.0 / 3, -std::sqrt(2.0) / 3, -std::sqrt(6.0) / 3)));
  for (const auto& v : reference::tetrahedron_vertices()) CHECK(contains(v));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) CHECK(vertices[i].dot(vertices[j]) == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("partition of a single orthonormal frame") {
  const std::vector<Eigen::Vector3d> frame{Eigen::Vector3d::UnitY(), Eigen::Vector3d::UnitX(), Eigen::Vector3d::UnitZ()};
  const BasisPartition p = partition_into_bases(frame);
  CHECK(p.cover_count == 1);
  REQUIRE(p.triples.size() == 1);
  CHECK(p.triples[0] == Triple{0, 1, 2});
  CHECK_THROWS_AS(partition_into_bases(std::vector<Eigen::Vector3d>{frame[0], frame[1]}), PartitionFailure);
}

TEST_CASE("perturbing one vector breaks the partition") {
  std::vector<Eigen::Vector3d> coords;
  for (const auto& v : setup().orbit.vectors()) coords.push_back(v.coords);
  CHECK(partition_into_bases(coords).triples.size() == 8);
  coords[7] = (coords[7] + Eigen::Vector3d(1e-3, 0, 0)).normalized();
  CHECK_THROWS_AS(partition_into_bases(coords), PartitionFailure);
}

TEST_CASE("a generic seed has no orthonormal partition") {
  CHECK_THROWS_AS(make_setup(Eigen::Vector3d(0.3, -0.5, 0.8)), PartitionFailure);
}

TEST_CASE("canonical labels for an unnormalized seed") {
  const S4Setup other = make_setup(Eigen::Vector3d(1, 1, -1));
  CHECK(other.orbit.vectors().size() == 24);
  CHECK(other.orbit.at({1, 0}).element == 0);
  // triples ordered by their smallest element index, members by element index
  std::size_t previous = 0;
  for (int i = 1; i <= 8; ++i) {
    const auto& t = other.orbit.triples()[static_cast<std::size_t>(i - 1)];
    const std::size_t first = other.orbit.vectors()[t[0]].element;
    CHECK(other.orbit.vectors()[t[0]].element < other.orbit.vectors()[t[1]].element);
    CHECK(other.orbit.vectors()[t[1]].element < other.orbit.vectors()[t[2]].element);
    if (i > 1) CHECK(first > previous);
    previous = first;
  }
}

TEST_CASE("reference matching rejects a foreign orbit") {
  const Eigen::Vector3d seed = Eigen::Vector3d(1, -1, -1).normalized();
  const std::vector<OrbitVector> points = orbit_points(setup().standard, seed);
  REQUIRE(points.size() == 24);
  std::vector<Eigen::Vector3d> coords;
  for (const auto& p : points) coords.push_back(p.coords);
  const BasisPartition partition = partition_into_bases(coords);
  const Orbit foreign(seed, points, partition.triples, partition.cover_count);
  CHECK_THROWS_AS(match_reference_labels(foreign), FixtureMismatch);
}
