#include "polarity/parser.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace polarity {

namespace {

std::vector<Structure> trees(const std::vector<std::vector<Structure>>& leaves, std::size_t from,
                             std::size_t to) {
  if (to - from == 1) return leaves[from];
  std::vector<Structure> out;
  for (std::size_t split = from + 1; split < to; ++split) {
    const auto lefts = trees(leaves, from, split);
    const auto rights = trees(leaves, split, to);
    for (const auto& l : lefts)
      for (const auto& r : rights) out.push_back(Structure::bin(BinaryMode::Default, l, r));
  }
  return out;
}

}  // namespace

std::vector<Structure> bracketings(const std::vector<std::string>& tokens, const Lexicon& lex) {
  if (tokens.empty()) return {};
  std::vector<std::vector<Structure>> leaves;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const LexiconEntry* e = lex.find(tokens[i]);
    if (!e) throw UnknownWord(tokens[i], i);
    std::vector<Structure> choices;
    for (const auto& t : e->types) choices.push_back(Structure::leaf(t, Label{e->word, i}));
    leaves.push_back(std::move(choices));
  }
  return trees(leaves, 0, leaves.size());
}

ParseResult parse_sentence(std::string_view sentence, const Lexicon& lex, const SearchBudget& budget,
                           const ParseOptions& options) {
  ParseResult result;
  result.tokens = tokenize(sentence, lex);
  if (result.tokens.empty()) return result;

  std::vector<Formula> goals = options.goals;
  if (goals.empty()) goals = {Formula::neutral_clause(), Formula::positive_clause()};

  std::vector<Sequent> jobs;
  for (const auto& tree : bracketings(result.tokens, lex))
    for (const auto& g : goals) jobs.push_back(Sequent{tree, g});

  std::vector<ProveResult> outcomes(jobs.size());
  unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(jobs.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) outcomes[i] = prove(jobs[i], budget);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  // Aggregate in job order (bracketing index, then goal).
  for (auto& o : outcomes) {
    result.budget_exhausted = result.budget_exhausted || o.budget_exhausted;
    result.timed_out = result.timed_out || o.timed_out;
    for (auto& d : o.derivations) {
      Reading r = extract_reading(d);
      if (std::find(result.readings.begin(), result.readings.end(), r) == result.readings.end()) {
        result.readings.push_back(std::move(r));
        result.derivations.push_back(std::move(d));
      }
    }
  }
  result.verdict = result.derivations.empty() ? Verdict::UngrammaticalWithinBudget : Verdict::Grammatical;
  return result;
}

}  // namespace polarity
