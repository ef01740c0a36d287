#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "s4bell/permutation.hpp"

namespace s4bell {

/// A finite permutation group listed in lexicographic order of one-line images,
/// with a precomputed multiplication table.
class GroupTable {
 public:
  /// Closure of `generators` under composition. Throws on empty input or mixed degrees.
  static GroupTable generate(std::span<const Permutation> generators);

  std::size_t order() const { return elements_.size(); }
  int degree() const { return elements_.front().degree(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& operator[](std::size_t index) const { return elements_[index]; }

  /// Index of `p`; throws InternalError if `p` is not in the group.
  std::size_t index_of(const Permutation& p) const;
  std::size_t identity_index() const { return identity_; }
  /// Index of elements()[a] o elements()[b].
  std::size_t product_index(std::size_t a, std::size_t b) const { return products_[a * order() + b]; }
  std::size_t inverse_index(std::size_t a) const { return inverses_[a]; }

  /// Number of elements per cycle type. For S_n these are the conjugacy classes.
  std::map<CycleType, std::size_t> class_sizes() const;

 private:
  explicit GroupTable(std::vector<Permutation> sorted_elements);

  std::vector<Permutation> elements_;
  std::vector<std::size_t> products_;
  std::vector<std::size_t> inverses_;
  std::size_t identity_ = 0;
};

/// S_n generated by the transpositions (1 k), k = 2..n.
GroupTable symmetric_group(int degree);

}  // namespace s4bell
