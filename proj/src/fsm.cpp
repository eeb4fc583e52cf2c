#include "polarity/fsm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace polarity {

std::string_view to_string(PolState s) {
  switch (s) {
    case PolState::Pos: return "Pos";
    case PolState::Neu: return "Neu";
    case PolState::Neg: return "Neg";
  }
  return "?";
}

bool PolarityMachine::is_start(PolState s) const {
  return std::find(starts.begin(), starts.end(), s) != starts.end();
}

bool PolarityMachine::has_quantifier(std::string_view word) const {
  return std::any_of(transitions.begin(), transitions.end(), [&](const auto& t) { return t.word == word; });
}

std::optional<PolState> clause_state(const Formula& f) {
  if (f == Formula::neutral_clause()) return PolState::Neu;
  if (f == Formula::positive_clause()) return PolState::Pos;
  if (f == Formula::negative_clause()) return PolState::Neg;
  return std::nullopt;
}

PolarityMachine machine_from_lexicon(const Lexicon& lex) {
  PolarityMachine m;
  for (const auto& e : lex.entries()) {
    for (const auto& t : e.types) {
      if (!t.is(FormulaKind::Over) || t.binary_mode() != BinaryMode::C) continue;
      const auto out = clause_state(t.result());
      if (!out) throw MalformedQuantifier(e.word, "result is not s0, s+ or s-");
      const Formula& arg = t.argument();
      if (!arg.is(FormulaKind::Under) || arg.binary_mode() != BinaryMode::C)
        throw MalformedQuantifier(e.word, "argument is not of the form np \\c S");
      if (arg.argument() != Formula::atom("np")) throw MalformedQuantifier(e.word, "scope argument is not np");
      const auto in = clause_state(arg.result());
      if (!in) throw MalformedQuantifier(e.word, "scope is not s0, s+ or s-");
      Transition tr{e.word, *out, *in};
      if (std::find(m.transitions.begin(), m.transitions.end(), tr) == m.transitions.end())
        m.transitions.push_back(std::move(tr));
    }
  }
  return m;
}

std::vector<Run> accepting_runs(const PolarityMachine& m, const std::vector<std::string>& scope_seq) {
  std::vector<Run> out;
  Run cur;

  // Epsilon edges never form a cycle in a well-formed machine; the guard
  // keeps a hand-built one from looping.
  std::function<void(std::size_t, int)> step = [&](std::size_t k, int eps_left) {
    const PolState here = cur.states.back();
    if (k == scope_seq.size() && here == m.final_state) out.push_back(cur);
    if (k < scope_seq.size()) {
      for (const auto& t : m.transitions) {
        if (t.word != scope_seq[k] || t.from != here) continue;
        cur.states.push_back(t.to);
        cur.edges.push_back(t.word);
        step(k + 1, 3);
        cur.states.pop_back();
        cur.edges.pop_back();
      }
    }
    if (k == 0 || eps_left == 0) return;
    for (const auto& [from, to] : m.epsilon) {
      if (from != here) continue;
      cur.states.push_back(to);
      cur.edges.emplace_back();
      step(k, eps_left - 1);
      cur.states.pop_back();
      cur.edges.pop_back();
    }
  };

  for (PolState s : m.starts) {
    cur = Run{{s}, {}};
    step(0, 3);
  }
  return out;
}

bool evaluation_order_ok(const PolarityMachine& m, const Reading& reading, const Run& run) {
  std::vector<std::size_t> fired;  // edge index of each quantifier's firing
  for (std::size_t i = 0; i < run.edges.size(); ++i)
    if (!run.edges[i].empty()) fired.push_back(i);
  if (fired.size() != reading.scope_order.size()) return false;

  for (const auto& [i, j] : inverted_pairs(reading)) {
    bool through_start = false;
    for (std::size_t s = fired[i] + 1; s <= fired[j]; ++s) through_start = through_start || m.is_start(run.states[s]);
    if (!through_start) return false;
  }
  return true;
}

std::vector<Run> admissible_runs(const PolarityMachine& m, const Reading& reading) {
  std::vector<std::string> words;
  for (const auto& q : reading.scope_order) words.push_back(q.word);
  std::vector<Run> out;
  for (auto& r : accepting_runs(m, words))
    if (evaluation_order_ok(m, reading, r)) out.push_back(std::move(r));
  return out;
}

std::set<Reading> predict(const PolarityMachine& m, const std::vector<ScopeItem>& quantifiers) {
  std::vector<std::size_t> idx(quantifiers.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::set<Reading> out;
  do {
    Reading r;
    for (auto i : idx) r.scope_order.push_back(quantifiers[i]);
    if (!admissible_runs(m, r).empty()) out.insert(std::move(r));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace polarity
