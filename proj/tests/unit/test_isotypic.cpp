#include <doctest.h>

#include <random>

#include "s4bell/errors.hpp"
#include "s4bell/isotypic.hpp"
#include "s4bell/reference_data.hpp"
#include "support.hpp"

using namespace s4bell;
using s4bell::testing::setup;

TEST_CASE("D x D splits into four components of multiplicity one") {
  const auto& dec = setup().decomposition;
  REQUIRE(dec.components().size() == 4);
  const std::array<int, 4> dims{3, 3, 2, 1};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& c = dec.components()[k];
    CHECK(c.irrep == kTensorSquareIrreps[k]);
    CHECK(c.dim == dims[k]);
    CHECK(c.multiplicity == 1);
    CHECK(c.projector.trace() == doctest::Approx(dims[k]).epsilon(1e-12));
  }
  CHECK(irrep_name(Irrep::TwistedStandard) == "D~");
  CHECK(irrep_name(Irrep::Scalar) == "D0");
}

TEST_CASE("character of D2 on every class") {
  const auto& chi = setup().decomposition.component(Irrep::Two).character;
  CHECK(chi.at({1, 1, 1, 1}) == doctest::Approx(2.0));
  CHECK(chi.at({2, 1, 1}) == doctest::Approx(0.0));
  CHECK(chi.at({2, 2}) == doctest::Approx(2.0));
  CHECK(chi.at({3, 1}) == doctest::Approx(-1.0));
  CHECK(chi.at({4}) == doctest::Approx(0.0));
}

TEST_CASE("property: projector algebra") {
  const auto& comps = setup().decomposition.components();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(9, 9);
  for (const auto& a : comps) {
    sum += a.projector;
    CHECK(max_abs_diff(a.projector, a.projector.transpose()) < 1e-9);
    CHECK(max_abs_diff(a.projector * a.projector, a.projector) < 1e-9);
    for (const auto& b : comps)
      if (a.irrep != b.irrep) CHECK((a.projector * b.projector).cwiseAbs().maxCoeff() < 1e-9);
  }
  CHECK(max_abs_diff(sum, Eigen::MatrixXd::Identity(9, 9)) < 1e-9);
}

TEST_CASE("property: character orthogonality of the four irreps") {
  const auto sizes = setup().group.class_sizes();
  for (Irrep s : kTensorSquareIrreps)
    for (Irrep r : kTensorSquareIrreps) {
      const auto& a = setup().decomposition.component(s).character;
      const auto& b = setup().decomposition.component(r).character;
      double inner = 0.0;
      for (const auto& [type, size] : sizes) inner += static_cast<double>(size) * a.at(type) * b.at(type);
      CHECK(inner / 24.0 == doctest::Approx(s == r ? 1.0 : 0.0));
    }
}

TEST_CASE("projectors commute with the group action") {
  for (const auto& c : setup().decomposition.components())
    for (const auto& g : setup().product.matrices()) REQUIRE(max_abs_diff(g * c.projector, c.projector * g) < 1e-9);
}

TEST_CASE("scalar projector is the normalized identity vector") {
  Eigen::VectorXd vec_i = Eigen::VectorXd::Zero(9);
  vec_i(0) = vec_i(4) = vec_i(8) = 1.0;
  const Eigen::MatrixXd expected = vec_i * vec_i.transpose() / 3.0;
  CHECK(max_abs_diff(setup().decomposition.component(Irrep::Scalar).projector, expected) < 1e-12);
  CHECK(max_abs_diff(expected, reference::change_of_basis().row(8).transpose() * reference::change_of_basis().row(8)) <
        1e-12);
}

TEST_CASE("bundled change of basis block-diagonalizes the projectors") {
  const BasisValidation v = validate_against_reference_basis(setup().decomposition);
  CHECK(v.orthogonality_defect < 1e-9);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(v.block_defect[k] < 1e-9);
    CHECK(v.block_trace[k] == doctest::Approx(reference::kBlockDims[k]));
  }
  const auto& c = reference::change_of_basis();
  const Eigen::MatrixXd scalar = c * setup().decomposition.component(Irrep::Scalar).projector * c.transpose();
  Eigen::MatrixXd slot = Eigen::MatrixXd::Zero(9, 9);
  slot(8, 8) = 1.0;
  CHECK(max_abs_diff(scalar, slot) < 1e-9);
}

TEST_CASE("property: projected norms are basis independent") {
  const auto& c = reference::change_of_basis();
  std::mt19937_64 rng(7311);
  std::normal_distribution<double> normal;
  const std::array<int, 4> offsets{0, 3, 6, 8};
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXd v(9);
    for (int k = 0; k < 9; ++k) v(k) = normal(rng);
    v.normalize();
    const Eigen::VectorXd cv = c * v;
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& p = setup().decomposition.components()[k].projector;
      const double block = cv.segment(offsets[k], reference::kBlockDims[k]).squaredNorm();
      REQUIRE((p * v).squaredNorm() == doctest::Approx(block).epsilon(1e-9));
    }
  }
}

TEST_CASE("a non-square representation is not decomposed") {
  const Representation one = trivial_rep(setup().group);
  CHECK_THROWS_AS(isotypic_projectors(setup().standard, one), DecompositionFailure);
}
