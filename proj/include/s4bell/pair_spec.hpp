#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "s4bell/orbit.hpp"

namespace s4bell {

/// Parses "x<alpha><i>", alpha in 0..2 and i in 1..8. `offset` is added to reported positions.
OrbitLabel parse_label(std::string_view text, std::size_t offset = 0);

/// Parses comma-separated "x<alpha><i>:x<beta><j>" pairs, e.g. "x01:x14,x01:x07,x01:x15".
/// Whitespace around items is ignored. Throws ParseError with the offending position.
std::vector<OrbitPairSpec> parse_pair_specs(std::string_view text);

std::string format_pair_specs(const std::vector<OrbitPairSpec>& pairs);

}  // namespace s4bell
