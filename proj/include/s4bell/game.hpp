#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "s4bell/bell_expression.hpp"
#include "s4bell/classical_bound.hpp"
#include "s4bell/tolerance.hpp"
#include "s4bell/orbit.hpp"

namespace s4bell {

/// Winning answers (a, b) per setting pair (s, t). Only pairs that occur in the Bell
/// expression have entries.
class WinningTable {
 public:
  using SettingPair = std::pair<int, int>;
  using AnswerPair = std::pair<int, int>;

  WinningTable() = default;
  WinningTable(std::map<SettingPair, std::vector<AnswerPair>> entries, int settings)
      : entries_(std::move(entries)), settings_(settings) {}

  const std::map<SettingPair, std::vector<AnswerPair>>& entries() const { return entries_; }
  int settings() const { return settings_; }
  /// Sorted winning answers for (s, t); empty if the pair never wins.
  const std::vector<AnswerPair>& answers(int s, int t) const;
  bool wins(int s, int t, int a, int b) const;

  /// True when every nonempty entry has exactly three answers with distinct a and distinct b.
  bool has_permutation_blocks() const;

  /// One row per setting pair: "14  01, 10, 22".
  std::string render() const;

 private:
  std::map<SettingPair, std::vector<AnswerPair>> entries_;
  int settings_ = 8;
};

WinningTable winning_table(const BellExpression& expr);

/// wins / rounds, kept exact.
struct WinProbability {
  int wins = 0;
  int rounds = 64;

  double value() const { return static_cast<double>(wins) / rounds; }
  std::string to_string() const { return std::to_string(wins) + "/" + std::to_string(rounds); }
  bool operator==(const WinProbability& o) const {
    return static_cast<long long>(wins) * o.rounds == static_cast<long long>(o.wins) * rounds;
  }
};

struct GameValue {
  WinProbability classical;
  double quantum = 0.0;

  bool violation() const { return quantum > classical.value() + tol::kMatrix; }
};

/// classical = classical_max / k^2, quantum = lambda_max / k^2 for uniformly drawn (s, t).
GameValue game_values(const BellExpression& expr, double lambda_max);

/// (1 / k^2) sum_{s,t,a,b} F(a, b; s, t) [a = f_A(s)] [b = f_B(t)].
WinProbability evaluate_strategy(const Strategy& strategy, const WinningTable& table);

/// sum over terms of |x_a^s><x_a^s| (x) |x_b^t><x_b^t|: the Bell operator rebuilt from the term list.
Eigen::MatrixXd term_operator(const BellExpression& expr, const Orbit& orbit);

}  // namespace s4bell
