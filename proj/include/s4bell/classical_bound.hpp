#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "s4bell/bell_expression.hpp"

namespace s4bell {

/// Deterministic answer tables: alice[s - 1] = f_A(s), bob[t - 1] = f_B(t).
struct Strategy {
  std::vector<int> alice;
  std::vector<int> bob;

  bool operator==(const Strategy&) const = default;
};

/// Base-3 index of a joint configuration: Alice's answers are digits 0..k-1 and Bob's are
/// digits k..2k-1, least significant first, where k is the setting count.
std::uint64_t encode_configuration(const Strategy& strategy);
Strategy decode_configuration(std::uint64_t index, int settings);

/// 3^(2k).
std::uint64_t configuration_count(int settings);

/// c(alpha): the number of terms satisfied by the configuration.
int coefficient(const BellExpression& expr, const Strategy& strategy);

/// counts[c] = number of configurations with c(alpha) = c, including c = 0.
struct StrategyHistogram {
  std::vector<std::uint64_t> counts;
  int c_max = 0;

  std::uint64_t total() const;
  /// sum_c c * counts[c]
  std::uint64_t weighted_total() const;
  std::uint64_t at(int c) const { return c >= 0 && static_cast<std::size_t>(c) < counts.size() ? counts[static_cast<std::size_t>(c)] : 0; }
};

/// Called with (completed Alice tuples, total Alice tuples). Invocations are serialized.
using ProgressCallback = std::function<void(std::size_t, std::size_t)>;

/// Full distribution of c(alpha) over all 3^(2k) configurations. Alice tuples are split into
/// contiguous chunks scanned by `threads` workers (0 = hardware concurrency); each worker
/// keeps a private histogram and the results are summed.
StrategyHistogram classical_histogram(const BellExpression& expr, unsigned threads = 0,
                                      const ProgressCallback& progress = {});

/// max_alpha c(alpha); Bob's settings decouple once Alice's answers are fixed.
int classical_max(const BellExpression& expr);

/// Lexicographically first (a_1..a_k, b_1..b_k) configuration achieving classical_max.
Strategy optimal_classical_strategy(const BellExpression& expr);

}  // namespace s4bell
