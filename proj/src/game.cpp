#include "s4bell/game.hpp"

#include <algorithm>
#include <set>

#include "s4bell/errors.hpp"
#include "s4bell/representation.hpp"

namespace s4bell {

const std::vector<WinningTable::AnswerPair>& WinningTable::answers(int s, int t) const {
  static const std::vector<AnswerPair> none;
  auto it = entries_.find({s, t});
  return it == entries_.end() ? none : it->second;
}

bool WinningTable::wins(int s, int t, int a, int b) const {
  const auto& list = answers(s, t);
  return std::binary_search(list.begin(), list.end(), AnswerPair{a, b});
}

bool WinningTable::has_permutation_blocks() const {
  for (const auto& [settings, list] : entries_) {
    std::set<int> as, bs;
    for (const auto& [a, b] : list) {
      as.insert(a);
      bs.insert(b);
    }
    if (list.size() != 3 || as.size() != 3 || bs.size() != 3) return false;
  }
  return true;
}

std::string WinningTable::render() const {
  std::string out;
  for (const auto& [settings, list] : entries_) {
    out += std::to_string(settings.first) + std::to_string(settings.second) + "  ";
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (k) out += ", ";
      out += std::to_string(list[k].first) + std::to_string(list[k].second);
    }
    out += '\n';
  }
  return out;
}

WinningTable winning_table(const BellExpression& expr) {
  std::map<WinningTable::SettingPair, std::vector<WinningTable::AnswerPair>> entries;
  for (const auto& t : expr.terms())
    entries[{t.alice_setting, t.bob_setting}].emplace_back(t.alice_outcome, t.bob_outcome);
  for (auto& [settings, list] : entries) std::sort(list.begin(), list.end());
  return WinningTable(std::move(entries), expr.settings());
}

GameValue game_values(const BellExpression& expr, double lambda_max) {
  const int rounds = expr.settings() * expr.settings();
  return {{classical_max(expr), rounds}, lambda_max / rounds};
}

WinProbability evaluate_strategy(const Strategy& strategy, const WinningTable& table) {
  const int k = table.settings();
  if (strategy.alice.size() != static_cast<std::size_t>(k) || strategy.bob.size() != static_cast<std::size_t>(k))
    throw Error("strategy does not match setting count");
  int wins = 0;
  for (int s = 1; s <= k; ++s)
    for (int t = 1; t <= k; ++t)
      if (table.wins(s, t, strategy.alice[static_cast<std::size_t>(s - 1)], strategy.bob[static_cast<std::size_t>(t - 1)]))
        ++wins;
  return {wins, k * k};
}

Eigen::MatrixXd term_operator(const BellExpression& expr, const Orbit& orbit) {
  Eigen::MatrixXd op = Eigen::MatrixXd::Zero(9, 9);
  for (const auto& t : expr.terms()) {
    const Eigen::VectorXd w =
        kron(orbit.at({t.alice_setting, t.alice_outcome}).coords, orbit.at({t.bob_setting, t.bob_outcome}).coords);
    op += w * w.transpose();
  }
  return op;
}

}  // namespace s4bell
