// polarity: parse sentences, prove sequents, query the polarity machine.
//
// Exit status: 0 affirmative verdict or all lines pass, 1 negative verdict or
// some line fails, 2 usage or input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "polarity/corpus.hpp"
#include "polarity/semantics.hpp"
#include "polarity/serialize.hpp"

namespace {

using namespace polarity;

struct Options {
  int budget = SearchBudget{}.max_structural_steps;
  int t_budget = -1;
  int max_derivations = SearchBudget{}.max_derivations;
  std::string lexicon_file;
  std::vector<std::string> goals;
  bool show_derivation = false;
  bool json = false;
};

SearchBudget budget_of(const Options& o) {
  SearchBudget b;
  b.max_structural_steps = o.budget;
  if (o.t_budget >= 0) b.max_t_insertions = o.t_budget;
  b.max_derivations = o.max_derivations;
  return b;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Lexicon lexicon_of(const Options& o) {
  return o.lexicon_file.empty() ? default_lexicon() : load_lexicon(read_file(o.lexicon_file));
}

std::string reading_line(const Reading& r) {
  return format_reading(r) + (is_linear(r) ? " (linear)" : " (inverse)");
}

std::string run_line(const Run& run) {
  std::string out(to_string(run.states.front()));
  for (std::size_t i = 0; i < run.edges.size(); ++i)
    out += " -" + (run.edges[i].empty() ? std::string("ε") : run.edges[i]) + "-> " +
           std::string(to_string(run.states[i + 1]));
  return out;
}

int cmd_parse(const std::string& sentence, const Options& o) {
  const Lexicon lex = lexicon_of(o);
  ParseOptions po;
  for (const auto& g : o.goals) po.goals.push_back(parse_formula(g));
  const ParseResult r = parse_sentence(sentence, lex, budget_of(o), po);
  const bool ok = r.verdict == Verdict::Grammatical;

  if (o.json) {
    std::cout << parse_result_to_json(r).dump(2) << '\n';
    return ok ? 0 : 1;
  }
  if (!ok) {
    std::cout << "ungrammatical (no proof within budget)";
    if (r.budget_exhausted) std::cout << "; search hit the budget";
    std::cout << '\n';
    return 1;
  }
  const auto n = r.readings.size();
  std::cout << "grammatical, " << n << (n == 1 ? " reading" : " readings");
  if (n == 1) {
    std::cout << ": " << reading_line(r.readings[0]) << '\n';
  } else {
    std::cout << ":\n";
    for (const auto& rd : r.readings) std::cout << "  " << reading_line(rd) << '\n';
  }
  if (o.show_derivation)
    for (std::size_t i = 0; i < r.derivations.size(); ++i)
      std::cout << "\nderivation " << i + 1 << " (" << format_reading(r.readings[i]) << "):\n"
                << render_derivation(r.derivations[i]);
  return 0;
}

int cmd_sequent(const std::string& ante, const std::string& succ, const Options& o) {
  const Lexicon lex = lexicon_of(o);
  const Sequent goal{antecedent_from_text(ante, lex), parse_formula(succ)};
  const ProveResult r = prove(goal, budget_of(o));
  const bool ok = !r.derivations.empty();
  if (o.json) {
    Json j;
    j["sequent"] = print_sequent(goal);
    j["derivable"] = ok;
    j["budget_exhausted"] = r.budget_exhausted;
    j["derivations"] = Json::array();
    for (const auto& d : r.derivations) j["derivations"].push_back(derivation_to_json(d));
    std::cout << j.dump(2) << '\n';
    return ok ? 0 : 1;
  }
  if (!ok) {
    std::cout << "not derivable within budget\n";
    return 1;
  }
  std::cout << "derivable: " << print_sequent(goal) << '\n';
  if (o.show_derivation) std::cout << render_derivation(r.derivations.front());
  return 0;
}

int cmd_fsm(const std::vector<std::string>& words, const Options& o) {
  const PolarityMachine m = machine_from_lexicon(lexicon_of(o));
  std::vector<ScopeItem> qs;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string w = to_lower(words[i]);
    std::replace(w.begin(), w.end(), '_', ' ');
    if (!m.has_quantifier(w)) throw std::invalid_argument("not a quantifier: '" + words[i] + "'");
    qs.push_back(ScopeItem{w, i});
  }
  const auto admissible = predict(m, qs);

  std::vector<std::size_t> idx(qs.size());
  std::iota(idx.begin(), idx.end(), 0);
  Json j = Json::array();
  do {
    Reading r;
    for (auto i : idx) r.scope_order.push_back(qs[i]);
    const bool ok = admissible.contains(r);
    if (o.json) {
      Json rj = reading_to_json(r);
      rj["admissible"] = ok;
      rj["runs"] = Json::array();
      for (const auto& run : admissible_runs(m, r)) rj["runs"].push_back(run_line(run));
      j.push_back(std::move(rj));
      continue;
    }
    std::cout << reading_line(r) << ": " << (ok ? "admissible" : "rejected") << '\n';
    for (const auto& run : admissible_runs(m, r)) std::cout << "  " << run_line(run) << '\n';
    if (!ok) {
      std::vector<std::string> seq;
      for (const auto& q : r.scope_order) seq.push_back(q.word);
      if (accepting_runs(m, seq).empty())
        std::cout << "  no accepting run\n";
      else
        std::cout << "  every accepting run skips a start state between inverted quantifiers\n";
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  if (o.json) std::cout << j.dump(2) << '\n';
  return admissible.empty() ? 1 : 0;
}

int cmd_corpus(const std::string& path, const Options& o) {
  const Lexicon lex = lexicon_of(o);
  const auto lines = path.empty() ? builtin_corpus() : load_corpus(read_file(path));
  const auto outcomes = run_corpus(lines, lex, budget_of(o));
  const bool all = std::all_of(outcomes.begin(), outcomes.end(), [](const auto& c) { return c.passed(); });

  if (o.json) {
    Json j = Json::array();
    for (const auto& c : outcomes) {
      Json cj;
      cj["sentence"] = c.line.sentence;
      cj["expected"] = c.line.expected_ok ? "ok" : "bad";
      cj["passed"] = c.passed();
      cj["prover_ok"] = c.prover_ok;
      cj["fsm_ok"] = c.fsm_ok;
      cj["agreement"] = c.agreement;
      cj["parse"] = parse_result_to_json(c.parse);
      cj["predicted"] = Json::array();
      for (const auto& r : c.predicted) cj["predicted"].push_back(reading_to_json(r));
      j.push_back(std::move(cj));
    }
    std::cout << j.dump(2) << '\n';
    return all ? 0 : 1;
  }
  for (const auto& c : outcomes) {
    std::cout << (c.passed() ? "PASS" : "FAIL") << "  " << c.line.sentence << "  expected "
              << (c.line.expected_ok ? "ok" : "bad") << "; prover "
              << (c.parse.verdict == Verdict::Grammatical ? "ok" : "bad") << " (" << c.parse.readings.size()
              << "), fsm " << (c.predicted.empty() ? "bad" : "ok") << " (" << c.predicted.size() << ")";
    if (!c.agreement) std::cout << "; scope orders differ";
    std::cout << '\n';
  }
  std::cout << std::count_if(outcomes.begin(), outcomes.end(), [](const auto& c) { return c.passed(); }) << "/"
            << outcomes.size() << " passed\n";
  return all ? 0 : 1;
}

int cmd_monotonicity(const std::string& word, int size) {
  bool all_down = true;
  for (unsigned n = size > 0 ? size : 1; n <= (size > 0 ? unsigned(size) : FiniteModel::kMaxSize); ++n) {
    const FiniteModel m(n);
    const auto q = denotation(word, m);
    const bool down = is_downward_entailing(q, m);
    all_down = all_down && down;
    std::cout << "n=" << n << "  downward: " << (down ? "yes" : "no")
              << "  upward: " << (is_upward_entailing(q, m) ? "yes" : "no") << '\n';
  }
  return all_down ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prover-backed parser for polarity sensitivity in a multimodal categorial grammar"};
  app.require_subcommand(1);
  Options o;

  auto add_budget = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "structural steps per rewrite run")->check(CLI::NonNegativeNumber);
    c->add_option("--t-budget", o.t_budget, "T insertions (default: leaves + 2)")->check(CLI::NonNegativeNumber);
    c->add_option("--max-derivations", o.max_derivations, "distinct readings to collect")
        ->check(CLI::PositiveNumber);
    c->add_flag("--show-derivation", o.show_derivation, "print proof trees");
  };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--lexicon", o.lexicon_file, "lexicon file (word := formula per line)");
    c->add_flag("--json", o.json, "machine-readable output");
  };

  std::string sentence, ante, succ, corpus_path, word;
  std::vector<std::string> quantifiers;
  int size = 0;

  auto* parse = app.add_subcommand("parse", "decide a sentence and list its scope readings");
  parse->add_option("sentence", sentence)->required();
  parse->add_option("--goal", o.goals, "goal type (repeatable; default s0 and s+)");
  add_budget(parse);
  add_common(parse);

  auto* sequent = app.add_subcommand("sequent", "prove ANTECEDENT |- SUCCEDENT");
  sequent->add_option("antecedent", ante, "formula; lexicon words stand for their types")->required();
  sequent->add_option("succedent", succ)->required();
  add_budget(sequent);
  add_common(sequent);

  auto* fsm = app.add_subcommand("fsm", "scope orders admitted by the polarity machine");
  fsm->add_option("quantifiers", quantifiers, "quantifiers in surface order (a_man for 'a man')");
  add_common(fsm);

  auto* corpus = app.add_subcommand("corpus", "run a corpus through prover and polarity machine");
  corpus->add_option("file", corpus_path, "sentence<TAB>ok|bad[<TAB>count] per line; built-in if omitted");
  add_budget(corpus);
  add_common(corpus);

  auto* mono = app.add_subcommand("monotonicity", "brute-force entailment check of a quantifier");
  mono->add_option("word", word)->required();
  mono->add_option("--size", size, "domain size (default: 1 to 6)")->check(CLI::Range(1, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*parse) return cmd_parse(sentence, o);
    if (*sequent) return cmd_sequent(ante, succ, o);
    if (*fsm) return cmd_fsm(quantifiers, o);
    if (*corpus) return cmd_corpus(corpus_path, o);
    if (*mono) return cmd_monotonicity(word, size);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
