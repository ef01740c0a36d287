#include "s4bell/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "s4bell/pair_spec.hpp"

namespace s4bell {

namespace {

using nlohmann::json;

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s = buf;
  if (s == "-0.00" || s == "-0.0000" || s == "-0.000000") s.erase(0, 1);
  return s;
}

json vector_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v(k));
  return out;
}

std::string pair_string(const OrbitPairSpec& p) { return to_string(p.phi) + ":" + to_string(p.psi); }

std::string answers_string(const std::vector<int>& answers) {
  std::string out;
  for (std::size_t k = 0; k < answers.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(answers[k]);
  }
  return out;
}

std::vector<std::size_t> by_label(const Orbit& orbit) {
  std::vector<std::size_t> order;
  for (const auto& triple : orbit.triples()) order.insert(order.end(), triple.begin(), triple.end());
  return order;
}

}  // namespace

json orbit_json(const Orbit& orbit, const GroupTable& group) {
  json vectors = json::array();
  for (std::size_t k : by_label(orbit)) {
    const auto& v = orbit.vectors()[k];
    vectors.push_back({{"label", to_string(v.label)},
                       {"basis", v.label.basis},
                       {"outcome", v.label.outcome},
                       {"element", group[v.element].to_cycle_string()},
                       {"coords", vector_json(v.coords)}});
  }
  return {{"seed", vector_json(orbit.seed())}, {"cover_count", orbit.cover_count()}, {"vectors", vectors}};
}

std::string orbit_text(const Orbit& orbit, const GroupTable& group) {
  std::ostringstream out;
  out << "label  element        x            y            z\n";
  for (std::size_t k : by_label(orbit)) {
    const auto& v = orbit.vectors()[k];
    std::string element = group[v.element].to_cycle_string();
    element.resize(std::max<std::size_t>(element.size(), 13), ' ');
    out << to_string(v.label) << "    " << element;
    for (int c = 0; c < 3; ++c) {
      std::string num = fixed(v.coords(c), 9);
      out << "  " << std::string(num.size() < 11 ? 11 - num.size() : 0, ' ') << num;
    }
    out << '\n';
  }
  out << "exact covers by orthonormal triples: " << orbit.cover_count() << '\n';
  return out.str();
}

json histogram_json(const StrategyHistogram& histogram) {
  json counts = json::array();
  const int last = std::max(20, histogram.c_max);
  for (int c = 0; c <= last; ++c) counts.push_back({{"c", c}, {"count", histogram.at(c)}});
  return {{"counts", counts}, {"c_max", histogram.c_max}, {"total", histogram.total()}};
}

std::string histogram_csv(const StrategyHistogram& histogram) {
  std::string out = "c,count\n";
  const int last = std::max(20, histogram.c_max);
  for (int c = 0; c <= last; ++c) out += std::to_string(c) + "," + std::to_string(histogram.at(c)) + "\n";
  return out;
}

json winning_table_json(const WinningTable& table) {
  json out = json::object();
  for (const auto& [settings, answers] : table.entries()) {
    json list = json::array();
    for (const auto& [a, b] : answers) list.push_back(std::to_string(a) + std::to_string(b));
    out[std::to_string(settings.first) + "," + std::to_string(settings.second)] = list;
  }
  return out;
}

json analysis_json(const Analysis& a) {
  json orbits = json::array();
  for (const auto& p : a.quantum.pairs) {
    json iso = json::array();
    for (const auto& e : p.isotypic) iso.push_back({{"label", irrep_name(e.irrep)}, {"dim", e.dim}, {"eigenvalue", e.value}});
    orbits.push_back({{"pair", pair_string(p.pair)}, {"contribution", p.contribution}, {"isotypic", iso}});
  }
  json quantum = {{"lambda_max", a.quantum.lambda_max},
                  {"eigenvector", vector_json(a.quantum.eigenvector)},
                  {"spectrum", a.quantum.spectrum},
                  {"orbits", orbits}};
  json classical = {{"bound", a.classical}, {"strategy", {{"alice", a.strategy.alice}, {"bob", a.strategy.bob}}}};
  if (a.histogram) classical["histogram"] = histogram_json(*a.histogram);
  json game = {{"classical", {{"wins", a.game.classical.wins}, {"rounds", a.game.classical.rounds},
                              {"value", a.game.classical.value()}}},
               {"quantum", a.game.quantum},
               {"violation", a.game.violation()}};
  return {{"pairs", format_pair_specs(a.pairs)},
          {"quantum", quantum},
          {"classical", classical},
          {"winning_table", winning_table_json(a.table)},
          {"game", game},
          {"gap", a.gap()}};
}

std::string game_text(const Analysis& a) {
  std::ostringstream out;
  const int rounds = a.game.classical.rounds;
  out << "Game over " << rounds << " equally likely setting pairs\n";
  out << "  classical win probability  " << a.game.classical.to_string() << " = " << fixed(a.game.classical.value(), 4)
      << '\n';
  out << "  quantum win probability    " << fixed(a.quantum.lambda_max, 2) << "/" << rounds << " = "
      << fixed(a.game.quantum, 4) << '\n';
  out << "  optimal classical strategy f_A = " << answers_string(a.strategy.alice)
      << "  f_B = " << answers_string(a.strategy.bob) << '\n';
  out << "Winning configurations (st  ab, ab, ab)\n" << a.table.render();
  return out.str();
}

std::string analysis_text(const Analysis& a) {
  std::ostringstream out;
  out << "Orbit pairs: " << format_pair_specs(a.pairs) << "\n\nQuantum bound\n";
  for (const auto& p : a.quantum.pairs) {
    out << "  " << pair_string(p.pair) << "  ";
    for (const auto& e : p.isotypic) out << ' ' << irrep_name(e.irrep) << ' ' << fixed(e.value, 2);
    out << "   contribution " << fixed(p.contribution, 2) << '\n';
  }
  out << "  lambda_max(X) = " << fixed(a.quantum.lambda_max, 2) << "\n\n";
  out << "Classical bound: " << a.classical << "\n";
  out << (a.game.violation() ? "Bell inequality violated" : "No violation") << ", gap "
      << fixed(a.gap(), 2) << "\n\n";
  out << game_text(a);
  if (a.histogram) {
    out << "\nConfigurations per coefficient c(alpha)\n";
    const int last = std::max(20, a.histogram->c_max);
    for (int c = 0; c <= last; ++c) out << "  " << c << "  " << a.histogram->at(c) << '\n';
    out << "  total " << a.histogram->total() << '\n';
  }
  return out.str();
}

json scan_json(const std::vector<ScanEntry>& entries, std::size_t top) {
  json out = json::array();
  for (std::size_t k = 0; k < std::min(top, entries.size()); ++k) {
    const auto& e = entries[k];
    out.push_back({{"pairs", format_pair_specs(e.pairs)},
                   {"lambda_max", e.lambda_max},
                   {"classical", e.classical},
                   {"gap", e.gap()}});
  }
  return out;
}

std::string scan_text(const std::vector<ScanEntry>& entries, std::size_t top) {
  std::ostringstream out;
  std::size_t violating = 0;
  for (const auto& e : entries) violating += e.gap() > 1e-9 ? 1 : 0;
  out << entries.size() << " candidates, " << violating << " with quantum > classical\n";
  out << "rank  pairs                      lambda_max  classical    gap\n";
  for (std::size_t k = 0; k < std::min(top, entries.size()); ++k) {
    const auto& e = entries[k];
    std::string spec = format_pair_specs(e.pairs);
    spec.resize(std::max<std::size_t>(spec.size(), 25), ' ');
    out << std::to_string(k + 1);
    out << std::string(6 - std::min<std::size_t>(5, std::to_string(k + 1).size()), ' ') << spec << "  "
        << fixed(e.lambda_max, 2) << "      " << e.classical << "        " << fixed(e.gap(), 2) << '\n';
  }
  return out.str();
}

}  // namespace s4bell
