#include "s4bell/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "s4bell/errors.hpp"

namespace s4bell {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(images_.size(), false);
  for (int image : images_) {
    if (image < 0 || image >= n || seen[static_cast<std::size_t>(image)])
      throw InvalidPermutation("images are not a bijection on 0.." + std::to_string(n - 1));
    seen[static_cast<std::size_t>(image)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int k = 0; k < degree; ++k) images[static_cast<std::size_t>(k)] = k;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int degree, int i, int j) {
  if (i < 0 || j < 0 || i >= degree || j >= degree || i == j)
    throw InvalidPermutation("transposition points out of range or equal");
  Permutation p = identity(degree);
  std::swap(p.images_[static_cast<std::size_t>(i)], p.images_[static_cast<std::size_t>(j)]);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cycle = *it;
    std::vector<int> images = identity(degree).images_;
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      const int to = cycle[(k + 1) % cycle.size()];
      if (from < 0 || from >= degree || used[static_cast<std::size_t>(from)])
        throw InvalidPermutation("cycle point out of range or repeated");
      used[static_cast<std::size_t>(from)] = true;
      images[static_cast<std::size_t>(from)] = to;
    }
    result = compose(Permutation(std::move(images)), result);
  }
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[static_cast<std::size_t>(images_[k])] = static_cast<int>(k);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != static_cast<int>(k)) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int k = start; !seen[static_cast<std::size_t>(k)]; k = (*this)(k)) {
      seen[static_cast<std::size_t>(k)] = true;
      cycle.push_back(k);
    }
    if (cycle.size() > 1) out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "e";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cycle[k] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw IncompatiblePermutations("cannot compose permutations of degree " + std::to_string(p.degree()) +
                                   " and " + std::to_string(q.degree()));
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int k = 0; k < p.degree(); ++k) images[static_cast<std::size_t>(k)] = p(q(k));
  return Permutation(std::move(images));
}

int sign(const Permutation& p) {
  int transpositions = 0;
  for (const auto& cycle : p.cycles()) transpositions += static_cast<int>(cycle.size()) - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

CycleType cycle_type(const Permutation& p) {
  CycleType type;
  int moved = 0;
  for (const auto& cycle : p.cycles()) {
    type.push_back(static_cast<int>(cycle.size()));
    moved += static_cast<int>(cycle.size());
  }
  type.insert(type.end(), static_cast<std::size_t>(p.degree() - moved), 1);
  std::sort(type.begin(), type.end(), std::greater<>());
  return type;
}

Permutation parse_cycles(std::string_view text, int degree) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_space();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip_space();
    if (pos != text.size()) throw ParseError("unexpected input after identity", pos);
    return Permutation::identity(degree);
  }
  if (pos == text.size()) throw ParseError("empty permutation", pos);

  std::vector<std::vector<int>> cycles;
  while (true) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_space();
      }
      if (pos == text.size()) throw ParseError("unterminated cycle", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw ParseError("expected a point", pos);
      const std::size_t start = pos;
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        value = value * 10 + (text[pos++] - '0');
      if (value < 1 || value > degree)
        throw ParseError("point " + std::to_string(value) + " outside 1.." + std::to_string(degree), start);
      if (std::find(cycle.begin(), cycle.end(), value - 1) != cycle.end())
        throw ParseError("point repeated within a cycle", start);
      cycle.push_back(value - 1);
    }
    if (cycle.empty()) throw ParseError("empty cycle", pos - 1);
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(degree, cycles);
}

std::vector<int> adjacent_transposition_word(const Permutation& p) {
  // Bubble-sort the one-line form. Each swap at k right-multiplies by s_k, so
  // p o s_{k1} o ... o s_{km} = e and p = s_{km} o ... o s_{k1}.
  std::vector<int> line(p.images().begin(), p.images().end());
  std::vector<int> swaps;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k + 1 < line.size(); ++k) {
      if (line[k] > line[k + 1]) {
        std::swap(line[k], line[k + 1]);
        swaps.push_back(static_cast<int>(k));
        changed = true;
      }
    }
  }
  return {swaps.rbegin(), swaps.rend()};
}

}  // namespace s4bell
