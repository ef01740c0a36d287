#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "s4bell/orbit.hpp"
#include "s4bell/representation.hpp"

namespace s4bell {

/// P(a_s = a, b_t = b). Settings are 1-based, outcomes 0-based.
struct ProbabilityTerm {
  int alice_setting = 1;
  int alice_outcome = 0;
  int bob_setting = 1;
  int bob_outcome = 0;

  auto operator<=>(const ProbabilityTerm&) const = default;
};

std::string to_string(const ProbabilityTerm& term);

/// A list of distinct probability terms over `settings` observables per party with
/// three outcomes each.
class BellExpression {
 public:
  BellExpression() = default;
  /// Validates ranges and rejects duplicate terms (DuplicateTerm).
  explicit BellExpression(std::vector<ProbabilityTerm> terms, int settings = 8,
                          std::vector<OrbitPairSpec> pairs = {});

  const std::vector<ProbabilityTerm>& terms() const { return terms_; }
  const std::vector<OrbitPairSpec>& pairs() const { return pairs_; }
  int settings() const { return settings_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Keeps terms whose settings are both <= k and shrinks the setting count to k.
  BellExpression restrict_settings(int k) const;

 private:
  std::vector<ProbabilityTerm> terms_;
  std::vector<OrbitPairSpec> pairs_;
  int settings_ = 8;
};

/// Terms of sum_n sum_g |<g, phi_n, psi_n | chi>|^2 read as probabilities: for every pair and
/// every group element g, D(g) phi_n is located in the orbit as x_a^s and D(g) psi_n as x_b^t.
/// Ordered by (pair, group element index). Throws DuplicateTerm on collisions.
BellExpression bell_terms(std::span<const OrbitPairSpec> pairs, const Orbit& orbit, const Representation& standard);

}  // namespace s4bell
