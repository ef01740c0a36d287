#include <doctest.h>

#include <algorithm>

#include "s4bell/analysis.hpp"
#include "s4bell/errors.hpp"
#include "s4bell/pair_spec.hpp"
#include "s4bell/report.hpp"
#include "support.hpp"

using namespace s4bell;
using s4bell::testing::setup;

namespace {

std::size_t parse_error_position(std::string_view text) {
  try {
    parse_pair_specs(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for " << text);
  return 0;
}

const ScanEntry* find_entry(const std::vector<ScanEntry>& entries, std::string_view spec) {
  auto wanted = parse_pair_specs(spec);
  std::sort(wanted.begin(), wanted.end());
  for (const auto& e : entries) {
    auto have = e.pairs;
    std::sort(have.begin(), have.end());
    if (have == wanted) return &e;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("pair specs parse") {
  const auto pairs = parse_pair_specs("x01:x14,x01:x07, x01:x15");
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == OrbitPairSpec{{1, 0}, {4, 1}});
  CHECK(pairs[1] == OrbitPairSpec{{1, 0}, {7, 0}});
  CHECK(pairs[2] == OrbitPairSpec{{1, 0}, {5, 1}});
  CHECK(format_pair_specs(pairs) == "x01:x14,x01:x07,x01:x15");
}

TEST_CASE("pair spec errors report positions") {
  CHECK(parse_error_position("x31:x14") == 1);
  CHECK(parse_error_position("x01:x19") == 6);
  CHECK(parse_error_position("x01x14") == 6);
  CHECK(parse_error_position("y01:x14") == 0);
  CHECK(parse_error_position("x01:x14,") == 8);
  CHECK(parse_error_position("x01:x145") == 7);
}

TEST_CASE("diagonal analysis") {
  const auto pairs = parse_pair_specs("x01:x01");
  const Analysis a = analyze(setup(), pairs);
  CHECK(a.quantum.lambda_max == doctest::Approx(8.0));
  CHECK(a.classical == 8);
  CHECK_FALSE(a.game.violation());
  CHECK(a.gap() == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("first example analysis reports the violation") {
  const auto pairs = parse_pair_specs("x01:x14,x01:x07,x01:x15");
  const Analysis a = analyze(setup(), pairs);
  CHECK(a.classical == 16);
  CHECK(a.gap() == doctest::Approx(0.09).epsilon(0.01 / 0.09));
  CHECK(a.game.violation());
  CHECK_FALSE(a.histogram.has_value());
  const std::string text = analysis_text(a);
  CHECK(text.find("lambda_max(X) = 16.09") != std::string::npos);
  CHECK(text.find("Classical bound: 16") != std::string::npos);
}

TEST_CASE("json output round-trips byte for byte") {
  const auto pairs = parse_pair_specs("x01:x25,x01:x14,x01:x18");
  const Analysis a = analyze(setup(), pairs);
  const std::string once = analysis_json(a).dump(2);
  const std::string twice = nlohmann::json::parse(once).dump(2);
  CHECK(once == twice);
  const auto parsed = nlohmann::json::parse(once);
  CHECK(parsed["classical"]["bound"] == 16);
  CHECK(parsed["game"]["classical"]["wins"] == 16);
  CHECK(parsed["quantum"]["orbits"].size() == 3);
}

TEST_CASE("histogram export") {
  StrategyHistogram h;
  h.counts = {5, 3, 0, 1};
  h.c_max = 3;
  // rows always run through c = 20 so the layout matches the reference tables
  const std::string csv = histogram_csv(h);
  CHECK(csv.rfind("c,count\n0,5\n1,3\n2,0\n3,1\n4,0\n", 0) == 0);
  REQUIRE(csv.size() >= 6);
  CHECK(csv.substr(csv.size() - 6) == "\n20,0\n");
  const auto j = histogram_json(h);
  CHECK(j["total"] == 9);
  CHECK(j["counts"].size() == 21);
}

TEST_CASE("orbit export lists every label") {
  const auto j = orbit_json(setup().orbit, setup().group);
  CHECK(j["vectors"].size() == 24);
  const std::string text = orbit_text(setup().orbit, setup().group);
  CHECK(text.find("x28") != std::string::npos);
}

TEST_CASE("single orbit scan finds no violation") {
  const auto entries = scan_bob_labels(setup(), 1);
  CHECK(entries.size() == 24);
  for (const auto& e : entries) CHECK(e.lambda_max <= e.classical + 1e-9);
  CHECK(entries.front().gap() == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("three orbit scan contains the examples") {
  const auto entries = scan_bob_labels(setup(), 3, {1, 0}, 2);
  CHECK(entries.size() == 2024);
  const ScanEntry* one = find_entry(entries, "x01:x14,x01:x07,x01:x15");
  const ScanEntry* two = find_entry(entries, "x01:x23,x01:x16,x01:x01");
  const ScanEntry* three = find_entry(entries, "x01:x25,x01:x14,x01:x18");
  REQUIRE(one);
  REQUIRE(two);
  REQUIRE(three);
  CHECK(one->gap() > 0);
  CHECK(two->gap() == doctest::Approx(0.51).epsilon(0.01 / 0.51));
  CHECK(three->gap() > 0);
  for (std::size_t k = 1; k < entries.size(); ++k) REQUIRE(entries[k - 1].gap() >= entries[k].gap() - 1e-9);
}

TEST_CASE("scan is deterministic across thread counts") {
  const auto a = scan_bob_labels(setup(), 2, {1, 0}, 1);
  const auto b = scan_bob_labels(setup(), 2, {1, 0}, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].pairs == b[k].pairs);
  CHECK(scan_text(a, 5) == scan_text(b, 5));
}
