#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace s4bell {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  unsigned threads = 0;
  /// When set, each check is printed here as soon as it completes.
  std::ostream* live = nullptr;
};

/// Recomputes every reference number for the S4 construction from scratch and compares:
/// the labeled orbit, the change-of-basis matrix, per-orbit and summed eigenvalues, the
/// probability-term lists, classical bounds, full coefficient histograms, the Example I
/// winning table and the game values.
VerificationReport run_verification(const VerifyOptions& options = {});

}  // namespace s4bell
