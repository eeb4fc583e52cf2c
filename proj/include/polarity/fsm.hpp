#ifndef POLARITY_FSM_HPP_
#define POLARITY_FSM_HPP_

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polarity/lexicon.hpp"
#include "polarity/readings.hpp"

namespace polarity {

enum class PolState : std::uint8_t { Pos, Neu, Neg };

std::string_view to_string(PolState s);

struct Transition {
  std::string word;
  PolState from;  // output polarity
  PolState to;    // input polarity
  friend bool operator==(const Transition&, const Transition&) = default;
};

struct PolarityMachine {
  std::vector<std::pair<PolState, PolState>> epsilon{{PolState::Pos, PolState::Neu}, {PolState::Neg, PolState::Neu}};
  std::vector<Transition> transitions;
  std::vector<PolState> starts{PolState::Pos, PolState::Neu};
  PolState final_state = PolState::Neu;

  bool is_start(PolState s) const;
  bool has_quantifier(std::string_view word) const;
};

class MalformedQuantifier : public std::runtime_error {
 public:
  MalformedQuantifier(std::string word, const std::string& why)
      : std::runtime_error("malformed quantifier type for '" + word + "': " + why), word_(std::move(word)) {}
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

/// Clause type for s0, s+ and s-; nullopt for anything else.
std::optional<PolState> clause_state(const Formula& f);

/// Every lexical type whose main connective is /c must read Out /c (np \c In)
/// with Out and In clause types.
PolarityMachine machine_from_lexicon(const Lexicon& lex);

/// A state path. edges[i] labels the move from states[i] to states[i+1];
/// an empty label is an epsilon move.
struct Run {
  std::vector<PolState> states;
  std::vector<std::string> edges;
  friend bool operator==(const Run&, const Run&) = default;
};

/// Runs from a start state to the final state firing the given quantifiers,
/// widest scope first. Epsilon moves may follow any firing but never precede
/// the first one, since every epsilon target is itself a start state.
std::vector<Run> accepting_runs(const PolarityMachine& m, const std::vector<std::string>& scope_seq);

/// For every inverted pair, the states between the wider quantifier's firing
/// and the narrower one's must include a start state.
bool evaluation_order_ok(const PolarityMachine& m, const Reading& reading, const Run& run);

/// Accepting runs for the reading that also satisfy evaluation_order_ok.
std::vector<Run> admissible_runs(const PolarityMachine& m, const Reading& reading);

/// Scope orders (permutations of the occurrences) with an admissible run.
std::set<Reading> predict(const PolarityMachine& m, const std::vector<ScopeItem>& quantifiers);

}  // namespace polarity

#endif  // POLARITY_FSM_HPP_
