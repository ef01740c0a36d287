#include "s4bell/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "s4bell/errors.hpp"

namespace s4bell {

Analysis analyze(const S4Setup& setup, std::span<const OrbitPairSpec> pairs, const AnalysisOptions& options) {
  Analysis a;
  a.pairs.assign(pairs.begin(), pairs.end());
  a.quantum = max_eigenvalue_sum(pairs, setup.orbit, setup.product, setup.decomposition);
  a.expression = bell_terms(pairs, setup.orbit, setup.standard);
  a.classical = classical_max(a.expression);
  a.strategy = optimal_classical_strategy(a.expression);
  a.table = winning_table(a.expression);
  a.game = game_values(a.expression, a.quantum.lambda_max);
  if (options.histogram) a.histogram = classical_histogram(a.expression, options.threads, options.progress);
  return a;
}

std::vector<ScanEntry> scan_bob_labels(const S4Setup& setup, int orbits, OrbitLabel phi, unsigned threads) {
  if (orbits < 1 || orbits > 3) throw Error("scan supports 1, 2 or 3 orbits");
  std::vector<OrbitLabel> labels;
  for (int i = 1; i <= setup.orbit.bases(); ++i)
    for (int a = 0; a < 3; ++a) labels.push_back({i, a});

  std::vector<std::vector<OrbitPairSpec>> candidates;
  std::vector<std::size_t> pick(static_cast<std::size_t>(orbits));
  auto enumerate = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
    if (depth == pick.size()) {
      std::vector<OrbitPairSpec> pairs;
      for (std::size_t k : pick) pairs.push_back({phi, labels[k]});
      candidates.push_back(std::move(pairs));
      return;
    }
    for (std::size_t k = from; k < labels.size(); ++k) {
      pick[depth] = k;
      self(self, depth + 1, k + 1);
    }
  };
  enumerate(enumerate, 0, 0);

  std::vector<ScanEntry> entries(candidates.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < candidates.size(); k = next++) {
      const auto& pairs = candidates[k];
      const QuantumBound q = max_eigenvalue_sum(pairs, setup.orbit, setup.product, setup.decomposition);
      entries[k] = {pairs, q.lambda_max, classical_max(bell_terms(pairs, setup.orbit, setup.standard))};
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Gaps equal to 1e-9 count as ties so rounding noise cannot reorder equivalent entries.
  auto key = [](const ScanEntry& e) { return std::llround(e.gap() * 1e9); };
  std::stable_sort(entries.begin(), entries.end(),
                   [&](const ScanEntry& x, const ScanEntry& y) { return key(x) > key(y); });
  return entries;
}

}  // namespace s4bell
