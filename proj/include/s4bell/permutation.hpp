#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace s4bell {

/// Sorted (descending) multiset of cycle lengths, e.g. {2, 1, 1} for a transposition in S4.
using CycleType = std::vector<int>;

/// An element of S_n in one-line notation: images()[k] is where k maps (0-based).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless `images` is a bijection on {0, ..., n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Swaps 0-based points i and j.
  static Permutation transposition(int degree, int i, int j);
  /// Builds from disjoint or overlapping cycles of 0-based points; cycles are applied right to left.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Disjoint cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const;

  /// Cycle notation with 1-based points, "e" for the identity.
  std::string to_cycle_string() const;

  /// Lexicographic on the one-line images.
  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// (p o q)(k) = p(q(k)). Throws IncompatiblePermutations on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// +1 for even, -1 for odd permutations.
int sign(const Permutation& p);

CycleType cycle_type(const Permutation& p);

/// Parses cycle notation such as "(1 2)(3 4)" with 1-based points; "e" is the identity.
/// Commas between points are accepted. Throws ParseError with the offending offset.
Permutation parse_cycles(std::string_view text, int degree);

/// Writes `p` as a product of adjacent transpositions s_k = (k k+1), 0-based k.
/// The returned word w satisfies p = s_{w[0]} o s_{w[1]} o ... ; the identity gives an empty word.
std::vector<int> adjacent_transposition_word(const Permutation& p);

}  // namespace s4bell
