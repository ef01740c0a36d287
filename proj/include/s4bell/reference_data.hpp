#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "s4bell/bell_expression.hpp"
#include "s4bell/orbit.hpp"

/// Published reference data for the S4 construction: the transposition matrices of the
/// standard representation, the change-of-basis matrix for D(x)D, the labeled 24-vector
/// orbit, the three three-orbit examples and their tables.
namespace s4bell::reference {

struct TranspositionMatrix {
  int i;  // 1-based
  int j;
  Eigen::Matrix3d matrix;
};

/// D(12), D(13), D(14), D(23), D(24), D(34).
const std::array<TranspositionMatrix, 6>& transposition_matrices();
const Eigen::Matrix3d& transposition_matrix(int i, int j);

/// Rows grouped D, D~, D2, D0 (3 + 3 + 2 + 1).
const Eigen::Matrix<double, 9, 9>& change_of_basis();
inline constexpr std::array<int, 4> kBlockDims{3, 3, 2, 1};

/// x_alpha^i for i = 1..8, alpha = 0..2.
const Eigen::Vector3d& orbit_vector(const OrbitLabel& label);
inline const Eigen::Vector3d& orbit_seed() { return orbit_vector({1, 0}); }

/// The four tetrahedron vertices a_1..a_4.
const std::array<Eigen::Vector3d, 4>& tetrahedron_vertices();

/// Row of the winning-configuration table: settings "st" and the winning answers "ab".
struct WinningRow {
  int alice_setting;
  int bob_setting;
  std::vector<std::string> answers;
};

struct Example {
  std::string name;
  std::string pair_spec;
  std::array<double, 3> per_orbit;
  double lambda_max;
  int classical_bound;
  /// counts for c = 1..20
  std::array<std::uint64_t, 20> histogram;
  /// 72 terms, each written as the four digits "s a t b".
  std::string_view terms;
};

/// Examples I, II, III.
const std::array<Example, 3>& examples();

std::vector<ProbabilityTerm> parse_terms(std::string_view digits);

/// Winning table of Example I.
const std::vector<WinningRow>& example_one_winning_table();

}  // namespace s4bell::reference
