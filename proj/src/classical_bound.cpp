#include "s4bell/classical_bound.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "s4bell/errors.hpp"

namespace s4bell {

namespace {

constexpr int kOutcomes = 3;
constexpr int kMaxSettings = 8;
constexpr std::size_t kRowSize = kMaxSettings * kOutcomes;

std::size_t power_of_three(int exponent) {
  std::size_t p = 1;
  for (int k = 0; k < exponent; ++k) p *= 3;
  return p;
}

/// rows[s][a] is the vector over (t, b) of F[s][t][a][b]: how many terms Alice's answer a to
/// setting s satisfies for each Bob answer b to setting t.
struct TermTable {
  int settings;
  std::array<std::array<std::array<int, kRowSize>, kOutcomes>, kMaxSettings> rows{};

  explicit TermTable(const BellExpression& expr) : settings(expr.settings()) {
    for (const auto& t : expr.terms())
      ++rows[static_cast<std::size_t>(t.alice_setting - 1)][static_cast<std::size_t>(t.alice_outcome)]
            [static_cast<std::size_t>((t.bob_setting - 1) * kOutcomes + t.bob_outcome)];
  }
};

/// Walks Alice tuples in lexicographic order of (a_1..a_k), keeping
/// M[t][b] = sum_s F[s][t][a_s][b] up to date incrementally.
class AliceWalker {
 public:
  AliceWalker(const TermTable& table, std::size_t rank) : table_(table), digits_(static_cast<std::size_t>(table.settings)) {
    for (int s = table.settings - 1; s >= 0; --s) {
      digits_[static_cast<std::size_t>(s)] = static_cast<int>(rank % 3);
      rank /= 3;
    }
    for (int s = 0; s < table.settings; ++s) add(s, digits_[static_cast<std::size_t>(s)], 1);
  }

  const std::array<int, kRowSize>& marginal() const { return m_; }
  const std::vector<int>& digits() const { return digits_; }

  void advance() {
    for (int s = table_.settings - 1; s >= 0; --s) {
      int& d = digits_[static_cast<std::size_t>(s)];
      add(s, d, -1);
      d = (d + 1) % kOutcomes;
      add(s, d, 1);
      if (d != 0) return;
    }
  }

  /// sum_t max_b M[t][b]
  int best_response_score() const {
    int total = 0;
    for (int t = 0; t < table_.settings; ++t) {
      const auto* row = &m_[static_cast<std::size_t>(t * kOutcomes)];
      total += std::max({row[0], row[1], row[2]});
    }
    return total;
  }

 private:
  void add(int s, int a, int sign) {
    const auto& row = table_.rows[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)];
    for (std::size_t k = 0; k < kRowSize; ++k) m_[k] += sign * row[k];
  }

  const TermTable& table_;
  std::vector<int> digits_;
  std::array<int, kRowSize> m_{};
};

}  // namespace

std::uint64_t configuration_count(int settings) { return power_of_three(2 * settings); }

std::uint64_t encode_configuration(const Strategy& strategy) {
  if (strategy.alice.size() != strategy.bob.size()) throw Error("strategy tables differ in length");
  std::uint64_t index = 0;
  std::uint64_t place = 1;
  for (const auto* table : {&strategy.alice, &strategy.bob}) {
    for (int answer : *table) {
      if (answer < 0 || answer >= kOutcomes) throw Error("answers must be 0, 1 or 2");
      index += place * static_cast<std::uint64_t>(answer);
      place *= kOutcomes;
    }
  }
  return index;
}

Strategy decode_configuration(std::uint64_t index, int settings) {
  if (index >= configuration_count(settings)) throw Error("configuration index out of range");
  Strategy s;
  for (int k = 0; k < 2 * settings; ++k) {
    (k < settings ? s.alice : s.bob).push_back(static_cast<int>(index % kOutcomes));
    index /= kOutcomes;
  }
  return s;
}

int coefficient(const BellExpression& expr, const Strategy& strategy) {
  const auto k = static_cast<std::size_t>(expr.settings());
  if (strategy.alice.size() != k || strategy.bob.size() != k) throw Error("strategy does not match setting count");
  int c = 0;
  for (const auto& t : expr.terms())
    if (strategy.alice[static_cast<std::size_t>(t.alice_setting - 1)] == t.alice_outcome &&
        strategy.bob[static_cast<std::size_t>(t.bob_setting - 1)] == t.bob_outcome)
      ++c;
  return c;
}

std::uint64_t StrategyHistogram::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

std::uint64_t StrategyHistogram::weighted_total() const {
  std::uint64_t sum = 0;
  for (std::size_t c = 0; c < counts.size(); ++c) sum += c * counts[c];
  return sum;
}

StrategyHistogram classical_histogram(const BellExpression& expr, unsigned threads, const ProgressCallback& progress) {
  const TermTable table(expr);
  const int k = expr.settings();
  const std::size_t tuples = power_of_three(k);
  const std::size_t bins = expr.size() + 1;

  // Bob's answers for every Bob tuple, flattened as offsets t*3 + b into the marginal.
  std::vector<std::uint8_t> bob_offsets(tuples * static_cast<std::size_t>(k));
  for (std::size_t r = 0; r < tuples; ++r) {
    std::size_t rest = r;
    for (int t = 0; t < k; ++t) {
      bob_offsets[r * static_cast<std::size_t>(k) + static_cast<std::size_t>(t)] =
          static_cast<std::uint8_t>(t * kOutcomes + static_cast<int>(rest % kOutcomes));
      rest /= kOutcomes;
    }
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunk = std::max<std::size_t>(1, tuples / 81);
  const std::size_t chunk_count = (tuples + chunk - 1) / chunk;

  std::atomic<std::size_t> next_chunk{0};
  std::mutex progress_mutex;
  std::size_t done = 0;
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(bins, 0));

  auto worker = [&](unsigned id) {
    auto& local = partial[id];
    for (std::size_t c = next_chunk++; c < chunk_count; c = next_chunk++) {
      const std::size_t begin = c * chunk;
      const std::size_t end = std::min(tuples, begin + chunk);
      AliceWalker alice(table, begin);
      for (std::size_t r = begin; r < end; ++r) {
        const auto& m = alice.marginal();
        const std::uint8_t* offsets = bob_offsets.data();
        for (std::size_t b = 0; b < tuples; ++b, offsets += k) {
          int score = 0;
          for (int t = 0; t < k; ++t) score += m[offsets[t]];
          ++local[static_cast<std::size_t>(score)];
        }
        if (r + 1 < end) alice.advance();
      }
      if (progress) {
        std::lock_guard lock(progress_mutex);
        done += end - begin;
        progress(done, tuples);
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned id = 1; id < threads; ++id) pool.emplace_back(worker, id);
  worker(0);
  for (auto& t : pool) t.join();

  StrategyHistogram histogram;
  histogram.counts.assign(bins, 0);
  for (const auto& local : partial)
    for (std::size_t c = 0; c < bins; ++c) histogram.counts[c] += local[c];
  for (std::size_t c = 0; c < bins; ++c)
    if (histogram.counts[c] != 0) histogram.c_max = static_cast<int>(c);
  return histogram;
}

int classical_max(const BellExpression& expr) {
  const TermTable table(expr);
  const std::size_t tuples = power_of_three(expr.settings());
  AliceWalker alice(table, 0);
  int best = 0;
  for (std::size_t r = 0; r < tuples; ++r) {
    best = std::max(best, alice.best_response_score());
    if (r + 1 < tuples) alice.advance();
  }
  return best;
}

Strategy optimal_classical_strategy(const BellExpression& expr) {
  const int target = classical_max(expr);
  const TermTable table(expr);
  const std::size_t tuples = power_of_three(expr.settings());
  AliceWalker alice(table, 0);
  for (std::size_t r = 0; r < tuples; ++r) {
    if (alice.best_response_score() == target) {
      Strategy s{alice.digits(), {}};
      const auto& m = alice.marginal();
      for (int t = 0; t < expr.settings(); ++t) {
        const auto* row = &m[static_cast<std::size_t>(t * kOutcomes)];
        s.bob.push_back(static_cast<int>(std::max_element(row, row + kOutcomes) - row));
      }
      return s;
    }
    if (r + 1 < tuples) alice.advance();
  }
  throw InternalError("no configuration reaches the classical maximum");
}

}  // namespace s4bell
