// Command-line front end: reproduce the reference S4 numbers, analyze arbitrary orbit-pair
// choices, and scan Bob's labels for violations.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "s4bell/analysis.hpp"
#include "s4bell/errors.hpp"
#include "s4bell/pair_spec.hpp"
#include "s4bell/report.hpp"
#include "s4bell/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

s4bell::S4Setup load_setup(const std::vector<double>& seed) {
  if (seed.empty()) return s4bell::make_setup();
  return s4bell::make_setup(Eigen::Vector3d(seed[0], seed[1], seed[2]));
}

s4bell::ProgressCallback progress_printer() {
  auto last = std::make_shared<int>(-1);
  return [last](std::size_t done, std::size_t total) {
    const int percent = static_cast<int>(100 * done / total);
    if (percent / 10 != *last / 10 || done == total) {
      *last = percent;
      std::cerr << "\rhistogram " << percent << "%" << (done == total ? "\n" : "") << std::flush;
    }
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell inequalities from the S4 standard representation"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* verify = app.add_subcommand("verify", "Recompute every reference number and compare");

  std::string pairs_text;
  bool json = false;
  bool csv = false;
  bool histogram = false;
  std::vector<double> seed;

  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Alternative orbit seed x,y,z (normalized; canonical labels)")
        ->delimiter(',')
        ->expected(3);
  };

  auto* analyze = app.add_subcommand("analyze", "Quantum and classical bounds for a list of orbit pairs");
  analyze->add_option("--pairs", pairs_text, "Orbit pairs, e.g. x01:x14,x01:x07,x01:x15")->required();
  auto* json_flag = analyze->add_flag("--json", json, "Machine-readable JSON output");
  analyze->add_flag("--csv", csv, "Coefficient histogram as CSV (implies --histogram)")->excludes(json_flag);
  analyze->add_flag("--histogram", histogram, "Full 3^16 coefficient histogram");
  add_seed(analyze);

  int orbits = 3;
  std::size_t top = 10;
  std::string phi_text = "x01";
  auto* scan = app.add_subcommand("scan", "Rank Bob label choices by quantum-classical gap");
  scan->add_option("--orbits", orbits, "Number of orbit pairs (1..3)")->check(CLI::Range(1, 3));
  scan->add_option("--top", top, "Entries to print");
  scan->add_option("--phi", phi_text, "Alice label shared by all pairs");
  scan->add_flag("--json", json, "Machine-readable JSON output");
  add_seed(scan);

  auto* orbits_cmd = app.add_subcommand("orbits", "Print the labeled 24-vector orbit");
  orbits_cmd->add_flag("--json", json, "Machine-readable JSON output");
  add_seed(orbits_cmd);

  auto* game = app.add_subcommand("game", "Winning table and win probabilities");
  game->add_option("--pairs", pairs_text, "Orbit pairs")->required();
  game->add_flag("--json", json, "Machine-readable JSON output");
  add_seed(game);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) {
      s4bell::VerifyOptions options;
      options.threads = threads;
      options.live = &std::cout;
      const auto report = s4bell::run_verification(options);
      std::cout << report.checks.size() - report.failures() << "/" << report.checks.size() << " checks passed\n";
      return report.all_passed() ? kExitOk : kExitFailure;
    }

    const s4bell::S4Setup setup = load_setup(seed);

    if (*analyze || *game) {
      const auto pairs = s4bell::parse_pair_specs(pairs_text);
      s4bell::AnalysisOptions options;
      options.histogram = *analyze && (histogram || csv);
      options.threads = threads;
      if (options.histogram) options.progress = progress_printer();
      const s4bell::Analysis result = s4bell::analyze(setup, pairs, options);

      if (*game) {
        if (json)
          std::cout << nlohmann::json{{"winning_table", s4bell::winning_table_json(result.table)},
                                      {"classical", {{"wins", result.game.classical.wins},
                                                     {"rounds", result.game.classical.rounds}}},
                                      {"quantum", result.game.quantum},
                                      {"permutation_blocks", result.table.has_permutation_blocks()}}
                           .dump(2)
                    << '\n';
        else
          std::cout << s4bell::game_text(result);
      } else if (csv) {
        std::cout << s4bell::histogram_csv(*result.histogram);
      } else if (json) {
        std::cout << s4bell::analysis_json(result).dump(2) << '\n';
      } else {
        std::cout << s4bell::analysis_text(result);
      }
      return kExitOk;
    }

    if (*scan) {
      const auto phi = s4bell::parse_label(phi_text);
      const auto entries = s4bell::scan_bob_labels(setup, orbits, phi, threads);
      if (json)
        std::cout << s4bell::scan_json(entries, top).dump(2) << '\n';
      else
        std::cout << s4bell::scan_text(entries, top);
      return kExitOk;
    }

    if (*orbits_cmd) {
      if (json)
        std::cout << s4bell::orbit_json(setup.orbit, setup.group).dump(2) << '\n';
      else
        std::cout << s4bell::orbit_text(setup.orbit, setup.group);
      return kExitOk;
    }
  } catch (const s4bell::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const s4bell::DegenerateOrbit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const s4bell::PartitionFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
