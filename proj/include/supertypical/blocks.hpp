#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "supertypical/central_characters.hpp"
#include "supertypical/flags.hpp"

namespace supertypical {

// Split a flag by the central character of each entry (g0 characters for
// ambient g0, g characters for ambient g). The parts partition the input.
inline std::map<CentralCharacter, GradedVermaFlag> block_decompose(
    const SuperRootData& d, const WeylGroup& g, const GradedVermaFlag& flag) {
  std::map<CentralCharacter, GradedVermaFlag> out;
  for (const auto& [key, mult] : flag.entries) {
    const auto& [w, parity] = key;
    CentralCharacter chi = flag.ambient == Ambient::Even ? g0_char_of(d, g, w)
                                                         : g_char_of(d, g, w);
    auto& part = out[chi];
    part.ambient = flag.ambient;
    part.add(w, parity, mult);
  }
  return out;
}

// One line of a support report: a g0 central character occurring in the
// restriction flag of M~(lambda), its total multiplicity there, and which
// parities it occurs with.
struct SupportLine {
  CentralCharacter chi;
  std::uint64_t multiplicity = 0;
  std::set<int> parities;
};

// Per-character multiplicities of restriction_flag(lambda), in central
// character order. Total multiplicity across lines is always 2^l.
inline std::vector<SupportLine> support_report(const SuperRootData& d,
                                               const WeylGroup& g,
                                               const Weight& lambda) {
  require_b0n(d, "support_report");
  auto blocks = block_decompose(d, g, restriction_flag(d, lambda));
  std::vector<SupportLine> out;
  for (const auto& [chi, part] : blocks) {
    SupportLine line;
    line.chi = chi;
    for (const auto& [key, mult] : part.entries) {
      line.multiplicity += mult;
      line.parities.insert(key.second);
    }
    out.push_back(line);
  }
  return out;
}

}  // namespace supertypical
