#ifndef POLARITY_READINGS_HPP_
#define POLARITY_READINGS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "polarity/prover.hpp"

namespace polarity {

struct ScopeItem {
  std::string word;
  std::size_t position = 0;
  friend auto operator<=>(const ScopeItem&, const ScopeItem&) = default;
};

/// Quantifier occurrences from widest to narrowest scope.
struct Reading {
  std::vector<ScopeItem> scope_order;
  friend auto operator<=>(const Reading&, const Reading&) = default;
};

/// Scope order read off the nesting of c-mode slash eliminations. A
/// quantifier applied in the main premise of another takes wider scope; one
/// applied in its side premise (the continuation) takes narrower scope.
Reading extract_reading(const Derivation& d);

bool is_linear(const Reading& r);

/// Index pairs (i, j), i < j in scope order, whose surface order is reversed.
std::vector<std::pair<std::size_t, std::size_t>> inverted_pairs(const Reading& r);

/// "nobody > anybody"; "-" when there are no quantifiers.
std::string format_reading(const Reading& r);

}  // namespace polarity

#endif  // POLARITY_READINGS_HPP_
