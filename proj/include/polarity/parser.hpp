#ifndef POLARITY_PARSER_HPP_
#define POLARITY_PARSER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "polarity/lexicon.hpp"
#include "polarity/prover.hpp"
#include "polarity/readings.hpp"

namespace polarity {

enum class Verdict { Grammatical, UngrammaticalWithinBudget };

struct ParseResult {
  std::vector<std::string> tokens;
  Verdict verdict = Verdict::UngrammaticalWithinBudget;
  std::vector<Reading> readings;  // deduplicated, in order of discovery
  std::vector<Derivation> derivations;
  bool budget_exhausted = false;
  bool timed_out = false;
};

struct ParseOptions {
  /// Goal types tried for every bracketing; empty means {s0, s+}.
  std::vector<Formula> goals;
  /// Worker threads for the independent searches; 0 = hardware concurrency.
  unsigned threads = 0;
};

/// Every default-mode binary tree over the tokens, once per choice of
/// lexical type for ambiguous words. Leaves are labelled with word and position.
std::vector<Structure> bracketings(const std::vector<std::string>& tokens, const Lexicon& lex);

/// Throws UnknownWord for words missing from the lexicon.
ParseResult parse_sentence(std::string_view sentence, const Lexicon& lex, const SearchBudget& budget = {},
                           const ParseOptions& options = {});

}  // namespace polarity

#endif  // POLARITY_PARSER_HPP_
