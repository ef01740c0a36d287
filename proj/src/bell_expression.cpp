#include "s4bell/bell_expression.hpp"

#include <algorithm>
#include <set>

#include "s4bell/errors.hpp"

namespace s4bell {

std::string to_string(const ProbabilityTerm& term) {
  return "P(a" + std::to_string(term.alice_setting) + "=" + std::to_string(term.alice_outcome) + ", b" +
         std::to_string(term.bob_setting) + "=" + std::to_string(term.bob_outcome) + ")";
}

BellExpression::BellExpression(std::vector<ProbabilityTerm> terms, int settings, std::vector<OrbitPairSpec> pairs)
    : terms_(std::move(terms)), pairs_(std::move(pairs)), settings_(settings) {
  if (settings_ < 1 || settings_ > 8) throw Error("setting count must be in 1..8");
  std::set<ProbabilityTerm> seen;
  for (const auto& t : terms_) {
    if (t.alice_setting < 1 || t.alice_setting > settings_ || t.bob_setting < 1 || t.bob_setting > settings_ ||
        t.alice_outcome < 0 || t.alice_outcome > 2 || t.bob_outcome < 0 || t.bob_outcome > 2)
      throw Error("term out of range: " + to_string(t));
    if (!seen.insert(t).second) throw DuplicateTerm("duplicate term " + to_string(t));
  }
}

BellExpression BellExpression::restrict_settings(int k) const {
  std::vector<ProbabilityTerm> kept;
  std::copy_if(terms_.begin(), terms_.end(), std::back_inserter(kept),
               [k](const ProbabilityTerm& t) { return t.alice_setting <= k && t.bob_setting <= k; });
  return BellExpression(std::move(kept), k);
}

BellExpression bell_terms(std::span<const OrbitPairSpec> pairs, const Orbit& orbit, const Representation& standard) {
  std::vector<ProbabilityTerm> terms;
  terms.reserve(pairs.size() * standard.group().order());
  for (const auto& pair : pairs) {
    const Eigen::Vector3d& phi = orbit.at(pair.phi).coords;
    const Eigen::Vector3d& psi = orbit.at(pair.psi).coords;
    for (const auto& d : standard.matrices()) {
      const OrbitLabel alice = orbit.label_of(d * phi);
      const OrbitLabel bob = orbit.label_of(d * psi);
      terms.push_back({alice.basis, alice.outcome, bob.basis, bob.outcome});
    }
  }
  return BellExpression(std::move(terms), orbit.bases(), {pairs.begin(), pairs.end()});
}

}  // namespace s4bell
