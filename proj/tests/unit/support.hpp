#pragma once

#include <random>

#include <Eigen/Dense>

#include "s4bell/setup.hpp"

namespace s4bell::testing {

inline const S4Setup& setup() {
  static const S4Setup instance = make_setup();
  return instance;
}

inline Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::Vector3d v(normal(rng), normal(rng), normal(rng));
  return v.normalized();
}

inline Eigen::Vector3d label_vector(int outcome, int basis) { return setup().orbit.at({basis, outcome}).coords; }

}  // namespace s4bell::testing
