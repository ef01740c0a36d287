#include "s4bell/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "s4bell/analysis.hpp"
#include "s4bell/errors.hpp"
#include "s4bell/pair_spec.hpp"
#include "s4bell/reference_data.hpp"
#include "s4bell/tolerance.hpp"

namespace s4bell {

namespace {

constexpr double kEigenvalueReportTol = 0.01;
constexpr double kWinProbabilityTol = 1e-4;
constexpr double kExampleOneQuantumWin = 0.2514;

class Recorder {
 public:
  explicit Recorder(std::ostream* live) : live_(live) {}

  void add(std::string name, bool passed, std::string detail) {
    if (live_) *live_ << (passed ? "[PASS] " : "[FAIL] ") << name << (detail.empty() ? "" : ": " + detail) << std::endl;
    report_.checks.push_back({std::move(name), passed, std::move(detail)});
  }

  template <typename F>
  void run(const std::string& name, F&& check) {
    try {
      check();
    } catch (const std::exception& e) {
      add(name, false, std::string("error: ") + e.what());
    }
  }

  VerificationReport take() { return std::move(report_); }

 private:
  std::ostream* live_;
  VerificationReport report_;
};

std::string num(double v, int decimals = 4) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(decimals);
  s << v;
  return s.str();
}

void check_orbit(Recorder& rec, const S4Setup& setup) {
  rec.run("orbit table", [&] {
    const Orbit raw = generate_orbit(setup.standard, reference::orbit_seed());
    const Orbit labeled = match_reference_labels(raw);
    double worst = 0.0;
    for (const auto& v : labeled.vectors())
      worst = std::max(worst, (v.coords - reference::orbit_vector(v.label)).cwiseAbs().maxCoeff());
    const bool ok = worst <= tol::kMatrix && labeled.vectors().size() == 24;
    rec.add("orbit table", ok,
            "24 vectors labeled bijectively, max coordinate deviation " + num(worst, 12) + ", exact covers " +
                std::to_string(raw.cover_count()));
  });
  rec.run("tetrahedron orbit", [&] {
    const auto points = tetrahedron_orbit(setup.standard);
    bool ok = points.size() == 4;
    for (const auto& vertex : reference::tetrahedron_vertices())
      ok = ok && std::any_of(points.begin(), points.end(),
                             [&](const Eigen::Vector3d& p) { return (p - vertex).norm() < tol::kVectorMatch; });
    rec.add("tetrahedron orbit", ok, std::to_string(points.size()) + " vertices");
  });
  rec.run("change-of-basis matrix", [&] {
    const BasisValidation v = validate_against_reference_basis(setup.decomposition);
    const double worst = *std::max_element(v.block_defect.begin(), v.block_defect.end());
    rec.add("change-of-basis matrix", true,
            "orthogonality defect " + num(v.orthogonality_defect, 12) + ", block defect " + num(worst, 12) +
                ", block traces " + num(v.block_trace[0], 0) + "/" + num(v.block_trace[1], 0) + "/" +
                num(v.block_trace[2], 0) + "/" + num(v.block_trace[3], 0));
  });
}

void check_example(Recorder& rec, const S4Setup& setup, const reference::Example& ex, unsigned threads) {
  const std::string tag = "Example " + ex.name + " ";
  const auto pairs = parse_pair_specs(ex.pair_spec);
  AnalysisOptions options;
  options.histogram = true;
  options.threads = threads;
  const Analysis a = analyze(setup, pairs, options);

  for (std::size_t n = 0; n < pairs.size(); ++n) {
    const double got = a.quantum.pairs[n].contribution;
    rec.add(tag + "orbit " + std::to_string(n + 1) + " eigenvalue",
            std::abs(got - ex.per_orbit[n]) <= kEigenvalueReportTol,
            num(got) + " vs " + num(ex.per_orbit[n], 2) + " +- 0.01");
  }
  rec.add(tag + "lambda_max(X)", std::abs(a.quantum.lambda_max - ex.lambda_max) <= kEigenvalueReportTol,
          num(a.quantum.lambda_max) + " vs " + num(ex.lambda_max, 2) + " +- 0.01");

  double iso_gap = 0.0;
  for (const auto& p : a.quantum.pairs) {
    const auto direct =
        eigenvalues_direct(build_x(setup.orbit.at(p.pair.phi).coords, setup.orbit.at(p.pair.psi).coords, setup.product));
    std::vector<double> expected;
    for (const auto& e : p.isotypic) expected.insert(expected.end(), static_cast<std::size_t>(e.dim), e.value);
    std::sort(expected.rbegin(), expected.rend());
    for (std::size_t k = 0; k < expected.size(); ++k) iso_gap = std::max(iso_gap, std::abs(expected[k] - direct.values[k]));
  }
  rec.add(tag + "isotypic vs direct spectrum", iso_gap <= tol::kEigenvalue, "max deviation " + num(iso_gap, 12));

  const auto reference_terms = reference::parse_terms(ex.terms);
  const std::set<ProbabilityTerm> want(reference_terms.begin(), reference_terms.end());
  const std::set<ProbabilityTerm> got(a.expression.terms().begin(), a.expression.terms().end());
  std::string term_diff;
  for (const auto& t : want)
    if (!got.count(t)) term_diff += " missing " + to_string(t);
  for (const auto& t : got)
    if (!want.count(t)) term_diff += " extra " + to_string(t);
  rec.add(tag + "probability terms", term_diff.empty() && a.expression.size() == 72,
          std::to_string(a.expression.size()) + " terms" + term_diff);

  rec.add(tag + "classical bound", a.classical == ex.classical_bound,
          std::to_string(a.classical) + " vs " + std::to_string(ex.classical_bound));

  const StrategyHistogram& h = *a.histogram;
  std::string hist_diff;
  for (int c = 1; c <= 20; ++c)
    if (h.at(c) != ex.histogram[static_cast<std::size_t>(c - 1)])
      hist_diff += " c=" + std::to_string(c) + ": " + std::to_string(h.at(c)) + " vs " +
                   std::to_string(ex.histogram[static_cast<std::size_t>(c - 1)]);
  const std::uint64_t total = configuration_count(8);
  const std::uint64_t weighted = 72 * configuration_count(7);
  const bool mass = h.total() == total && h.weighted_total() == weighted;
  rec.add(tag + "coefficient histogram", hist_diff.empty() && mass && h.c_max == ex.classical_bound,
          "c=1..20 " + std::string(hist_diff.empty() ? "match" : "differ:" + hist_diff) + ", total " +
              std::to_string(h.total()) + ", sum c*count " + std::to_string(h.weighted_total()) + ", c=0 count " +
              std::to_string(h.at(0)));
}

void check_game(Recorder& rec, const S4Setup& setup) {
  const auto& ex = reference::examples()[0];
  const Analysis a = analyze(setup, parse_pair_specs(ex.pair_spec));

  std::string diff;
  std::size_t rows = 0;
  for (const auto& row : reference::example_one_winning_table()) {
    std::vector<std::string> got;
    for (const auto& [x, y] : a.table.answers(row.alice_setting, row.bob_setting))
      got.push_back(std::to_string(x) + std::to_string(y));
    if (got != row.answers) diff += " row " + std::to_string(row.alice_setting) + std::to_string(row.bob_setting);
    ++rows;
  }
  if (a.table.entries().size() != rows) diff += " row count " + std::to_string(a.table.entries().size());
  rec.add("Example I winning table", diff.empty(), std::to_string(rows) + " rows" + diff);

  const bool classical_ok = a.game.classical == WinProbability{16, 64} && a.game.classical.rounds == 64;
  rec.add("Example I classical win probability", classical_ok,
          a.game.classical.to_string() + " = " + num(a.game.classical.value()));
  rec.add("Example I quantum win probability", std::abs(a.game.quantum - kExampleOneQuantumWin) <= kWinProbabilityTol,
          num(a.game.quantum, 6) + " vs 0.2514 +- 0.0001");
  const WinProbability achieved = evaluate_strategy(a.strategy, a.table);
  rec.add("Example I optimal strategy", achieved == a.game.classical, "scores " + achieved.to_string());
}

}  // namespace

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

VerificationReport run_verification(const VerifyOptions& options) {
  Recorder rec(options.live);
  try {
    const S4Setup setup = make_setup();
    check_orbit(rec, setup);
    for (const auto& ex : reference::examples())
      rec.run("Example " + ex.name, [&] { check_example(rec, setup, ex, options.threads); });
    rec.run("game", [&] { check_game(rec, setup); });
  } catch (const std::exception& e) {
    rec.add("setup", false, std::string("error: ") + e.what());
  }
  return rec.take();
}

}  // namespace s4bell
