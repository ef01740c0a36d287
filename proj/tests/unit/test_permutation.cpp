#include <doctest.h>

#include <random>

#include "s4bell/errors.hpp"
#include "s4bell/group_table.hpp"
#include "s4bell/permutation.hpp"

using namespace s4bell;

namespace {
Permutation cyc(std::string_view text) { return parse_cycles(text, 4); }
}  // namespace

TEST_CASE("composition applies the right factor first") {
  const Permutation p = compose(cyc("(1 2)"), cyc("(2 3)"));
  CHECK(std::vector<int>(p.images().begin(), p.images().end()) == std::vector<int>{1, 2, 0, 3});
  CHECK(p == cyc("(1 2 3)"));
  CHECK(compose(cyc("(2 3)"), cyc("(1 2)")) == cyc("(1 3 2)"));
}

TEST_CASE("composition of different degrees is rejected") {
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), IncompatiblePermutations);
}

TEST_CASE("constructor rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), InvalidPermutation);
}

TEST_CASE("cycle notation round trip") {
  CHECK(cyc("e").is_identity());
  CHECK(cyc("(1 2)(3 4)") == cyc("(1,2)(3,4)"));
  CHECK(cyc("(1 2)(3 4)").to_cycle_string() == "(1 2)(3 4)");
  CHECK(cyc("(1 3 2 4)").to_cycle_string() == "(1 3 2 4)");
  CHECK(Permutation::identity(4).to_cycle_string() == "e");
  // cycles act right to left
  CHECK(cyc("(1 2)(2 3)") == compose(cyc("(1 2)"), cyc("(2 3)")));
}

TEST_CASE("cycle parse errors carry a position") {
  auto position_of = [](std::string_view text) -> long {
    try {
      parse_cycles(text, 4);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("(1 5)") == 3);
  CHECK(position_of("(1 2") == 4);
  CHECK(position_of("1 2)") == 0);
  CHECK(position_of("(1 1)") == 3);
  CHECK(position_of("") == 0);
}

TEST_CASE("subgroup generated by (12) and (34)") {
  const std::vector<Permutation> gens{cyc("(1 2)"), cyc("(3 4)")};
  const GroupTable g = GroupTable::generate(gens);
  CHECK(g.order() == 4);
  CHECK(g.index_of(cyc("(1 2)(3 4)")) < 4);
  CHECK_THROWS_AS(g.index_of(cyc("(1 3)")), InternalError);
}

TEST_CASE("S4 has order 24 and five conjugacy classes") {
  const GroupTable g = symmetric_group(4);
  REQUIRE(g.order() == 24);
  const auto sizes = g.class_sizes();
  CHECK(sizes.size() == 5);
  CHECK(sizes.at({1, 1, 1, 1}) == 1);
  CHECK(sizes.at({2, 1, 1}) == 6);
  CHECK(sizes.at({2, 2}) == 3);
  CHECK(sizes.at({3, 1}) == 8);
  CHECK(sizes.at({4}) == 6);
  CHECK(g[g.identity_index()].is_identity());
  CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
}

TEST_CASE("product and inverse tables agree with composition") {
  const GroupTable g = symmetric_group(4);
  for (std::size_t a = 0; a < g.order(); ++a) {
    CHECK(g[g.inverse_index(a)] == g[a].inverse());
    CHECK(compose(g[a], g[a].inverse()).is_identity());
    for (std::size_t b = 0; b < g.order(); ++b) REQUIRE(g[g.product_index(a, b)] == compose(g[a], g[b]));
  }
}

TEST_CASE("property: composition is associative") {
  const GroupTable g = symmetric_group(4);
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& p = g[pick(rng)];
    const auto& q = g[pick(rng)];
    const auto& r = g[pick(rng)];
    REQUIRE(compose(compose(p, q), r) == compose(p, compose(q, r)));
  }
}

TEST_CASE("property: sign is multiplicative") {
  const GroupTable g = symmetric_group(4);
  for (const auto& p : g.elements())
    for (const auto& q : g.elements()) REQUIRE(sign(compose(p, q)) == sign(p) * sign(q));
  CHECK(sign(cyc("(1 2)")) == -1);
  CHECK(sign(cyc("(1 2 3 4)")) == -1);
  CHECK(sign(cyc("(1 2)(3 4)")) == 1);
}

TEST_CASE("property: adjacent transposition word reproduces the permutation") {
  const GroupTable g = symmetric_group(4);
  for (const auto& p : g.elements()) {
    Permutation product = Permutation::identity(4);
    for (int k : adjacent_transposition_word(p)) product = compose(product, Permutation::transposition(4, k, k + 1));
    REQUIRE(product == p);
    CHECK(static_cast<int>(adjacent_transposition_word(p).size() % 2) == (sign(p) < 0 ? 1 : 0));
  }
}
