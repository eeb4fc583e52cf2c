#ifndef POLARITY_CORPUS_HPP_
#define POLARITY_CORPUS_HPP_

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polarity/fsm.hpp"
#include "polarity/parser.hpp"

namespace polarity {

struct CorpusLine {
  std::string sentence;
  bool expected_ok = true;
  std::optional<std::size_t> expected_readings;
  friend bool operator==(const CorpusLine&, const CorpusLine&) = default;
};

class CorpusError : public std::runtime_error {
 public:
  CorpusError(const std::string& msg, std::size_t line)
      : std::runtime_error("corpus line " + std::to_string(line) + ": " + msg) {}
};

/// `sentence<TAB>ok|bad[<TAB>count]` per line, `#` comments.
std::vector<CorpusLine> load_corpus(std::string_view text);
std::string print_corpus(const std::vector<CorpusLine>& lines);
const std::vector<CorpusLine>& builtin_corpus();

/// Quantifier occurrences of a token sequence, in surface order.
std::vector<ScopeItem> quantifier_occurrences(const std::vector<std::string>& tokens, const PolarityMachine& m);

struct CorpusOutcome {
  CorpusLine line;
  ParseResult parse;
  std::set<Reading> predicted;
  bool prover_ok = false;   // verdict and reading count as expected
  bool fsm_ok = false;      // verdict as expected
  bool agreement = false;   // prover and FSM give the same set of scope orders
  bool passed() const { return prover_ok && fsm_ok && agreement; }
};

CorpusOutcome run_corpus_line(const CorpusLine& line, const Lexicon& lex, const SearchBudget& budget = {});
std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusLine>& lines, const Lexicon& lex,
                                      const SearchBudget& budget = {});

/// Reads an antecedent written as a formula. Atoms naming lexicon words
/// (underscore for space) become labelled leaves of that word's type; products
/// and diamonds containing such words become structure, as does a unit
/// directly inside a structural product. Everything else stays a formula leaf.
/// Throws std::invalid_argument if such a word has more than one type.
Structure antecedent_from_text(std::string_view text, const Lexicon& lex);

}  // namespace polarity

#endif  // POLARITY_CORPUS_HPP_
