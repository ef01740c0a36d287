#include "s4bell/group_table.hpp"

#include <algorithm>
#include <set>

#include "s4bell/errors.hpp"

namespace s4bell {

GroupTable GroupTable::generate(std::span<const Permutation> generators) {
  if (generators.empty()) throw Error("generate_group needs at least one generator");
  const int n = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != n) throw IncompatiblePermutations("generators have mixed degrees");

  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& element : frontier) {
      for (const auto& g : generators) {
        Permutation product = compose(element, g);
        if (seen.insert(product).second) next.push_back(std::move(product));
      }
    }
    frontier = std::move(next);
  }
  return GroupTable(std::vector<Permutation>(seen.begin(), seen.end()));
}

GroupTable::GroupTable(std::vector<Permutation> sorted_elements) : elements_(std::move(sorted_elements)) {
  const std::size_t n = elements_.size();
  products_.resize(n * n);
  inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) products_[a * n + b] = index_of(compose(elements_[a], elements_[b]));
    inverses_[a] = index_of(elements_[a].inverse());
    if (elements_[a].is_identity()) identity_ = a;
  }
}

std::size_t GroupTable::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) throw InternalError("permutation " + p.to_cycle_string() + " not in group");
  return static_cast<std::size_t>(it - elements_.begin());
}

std::map<CycleType, std::size_t> GroupTable::class_sizes() const {
  std::map<CycleType, std::size_t> sizes;
  for (const auto& p : elements_) ++sizes[cycle_type(p)];
  return sizes;
}

GroupTable symmetric_group(int degree) {
  if (degree < 1) throw Error("symmetric group needs degree >= 1");
  std::vector<Permutation> generators;
  for (int k = 1; k < degree; ++k) generators.push_back(Permutation::transposition(degree, 0, k));
  if (generators.empty()) generators.push_back(Permutation::identity(degree));
  return GroupTable::generate(generators);
}

}  // namespace s4bell
