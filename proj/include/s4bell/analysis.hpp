#pragma once

#include <optional>
#include <span>
#include <vector>

#include "s4bell/bell_expression.hpp"
#include "s4bell/classical_bound.hpp"
#include "s4bell/game.hpp"
#include "s4bell/quantum_bound.hpp"
#include "s4bell/setup.hpp"

namespace s4bell {

/// Quantum and classical sides of one Bell expression.
struct Analysis {
  std::vector<OrbitPairSpec> pairs;
  QuantumBound quantum;
  BellExpression expression;
  int classical = 0;
  Strategy strategy;
  WinningTable table;
  GameValue game;
  std::optional<StrategyHistogram> histogram;

  double gap() const { return quantum.lambda_max - classical; }
};

struct AnalysisOptions {
  bool histogram = false;
  unsigned threads = 0;
  ProgressCallback progress;
};

Analysis analyze(const S4Setup& setup, std::span<const OrbitPairSpec> pairs, const AnalysisOptions& options = {});

struct ScanEntry {
  std::vector<OrbitPairSpec> pairs;
  double lambda_max = 0.0;
  int classical = 0;

  double gap() const { return lambda_max - classical; }
};

/// Every choice of `orbits` distinct Bob labels psi_1 < ... < psi_N paired with the fixed
/// Alice label `phi`, ranked by quantum-minus-classical gap (descending, ties in label order).
/// Repeated Bob labels are excluded because they duplicate probability terms.
std::vector<ScanEntry> scan_bob_labels(const S4Setup& setup, int orbits, OrbitLabel phi = {1, 0},
                                       unsigned threads = 0);

}  // namespace s4bell
