// Acceptance checks. Prints one PASS/FAIL line per criterion; exits nonzero
// if any fails. argv[1] is the path to the polarity executable.

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "polarity/corpus.hpp"
#include "polarity/semantics.hpp"
#include "polarity/serialize.hpp"

using namespace polarity;

namespace {

const Lexicon& lex() {
  static const Lexicon l = default_lexicon();
  return l;
}

const PolarityMachine& machine() {
  static const PolarityMachine m = machine_from_lexicon(lex());
  return m;
}

// Every derivation the checks below produce, for the audit.
std::vector<Derivation> g_audit;

ParseResult parse(const std::string& s, const SearchBudget& b = {}) {
  ParseResult r = parse_sentence(s, lex(), b);
  g_audit.insert(g_audit.end(), r.derivations.begin(), r.derivations.end());
  return r;
}

ProveResult prove_logged(const Sequent& s, const SearchBudget& b = {}) {
  ProveResult r = prove(s, b);
  g_audit.insert(g_audit.end(), r.derivations.begin(), r.derivations.end());
  return r;
}

std::set<Reading> reading_set(const ParseResult& r) { return {r.readings.begin(), r.readings.end()}; }

std::set<Reading> fsm_readings(const ParseResult& r) {
  return predict(machine(), quantifier_occurrences(r.tokens, machine()));
}

Reading linear_of(const std::vector<std::string>& words) {
  Reading r;
  for (std::size_t i = 0; i < words.size(); ++i) r.scope_order.push_back(ScopeItem{words[i], i});
  return r;
}

struct Check {
  std::ostringstream detail;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  }
};

bool acceptability(Check& c) {
  const std::vector<std::pair<std::string, bool>> table{
      {"Alice saw Bob", true},
      {"Alice saw a man's mother", true},
      {"Nobody saw anybody", true},
      {"Everybody saw anybody", false},
      {"Alice saw anybody", false},
      {"Anybody saw nobody", false},
      {"Nobody's mother saw anybody's father", true},
      {"Anybody's mother saw nobody's father", false},
  };
  int right = 0;
  for (const auto& [s, ok] : table) {
    const bool got = parse(s).verdict == Verdict::Grammatical;
    right += got == ok;
    c.require(got == ok, "'" + s + "' judged " + (got ? "ok" : "bad"));
  }
  c.detail << (c.detail.tellp() > 0 ? "; " : "") << right << "/" << table.size();
  return c.ok;
}

bool reading_counts(Check& c) {
  const auto a = parse("Nobody saw anybody");
  c.require(a.readings.size() == 1 && is_linear(a.readings[0]), "nobody saw anybody");
  const auto b = parse("Somebody saw everybody");
  c.require(b.readings.size() == 2, "somebody saw everybody: " + std::to_string(b.readings.size()));
  const auto d = parse("Alice saw a man's mother");
  c.require(d.readings.size() == 1, "alice saw a man's mother: " + std::to_string(d.readings.size()));
  c.detail << (c.detail.tellp() > 0 ? "; " : "") << "1, " << b.readings.size() << ", " << d.readings.size();
  return c.ok;
}

bool three_quantifiers(Check& c) {
  const std::vector<std::string> three{"nobody", "everybody", "somebody"};
  std::vector<ScopeItem> q3, q2;
  for (std::size_t i = 0; i < 3; ++i) q3.push_back(ScopeItem{three[i], i});
  q2 = {ScopeItem{"nobody", 0}, ScopeItem{"somebody", 1}};
  const auto p3 = predict(machine(), q3);
  const auto p2 = predict(machine(), q2);
  c.require(p3.contains(linear_of(three)), "fsm rejects nobody > everybody > somebody");
  c.require(!p2.contains(linear_of({"nobody", "somebody"})), "fsm admits nobody > somebody");
  c.require(p2.contains(Reading{{q2[1], q2[0]}}), "fsm rejects somebody > nobody");

  SearchBudget b;
  b.time_limit = std::chrono::minutes(10);
  const std::string sentence = "Nobody introduced everybody to somebody";
  ParseResult r = parse(sentence, b);
  std::string how = "default budget";
  if (r.budget_exhausted && !r.timed_out) {
    SearchBudget wider = b.scaled(2);
    wider.time_limit = b.time_limit;
    r = parse(sentence, wider);
    how = "doubled budget";
  }
  if (r.budget_exhausted) {
    c.detail << (c.detail.tellp() > 0 ? "; " : "") << "prover budget-exhausted, fsm result stands";
    return c.ok;
  }
  const auto proved = reading_set(r);
  c.require(std::any_of(proved.begin(), proved.end(), [](const Reading& x) { return is_linear(x); }),
            "prover misses the linear order");
  c.require(proved == fsm_readings(r), "prover and fsm disagree");
  c.detail << (c.detail.tellp() > 0 ? "; " : "") << "prover completed at " << how << " with " << proved.size()
           << " readings";
  return c.ok;
}

bool subtyping(Check& c) {
  auto derivable = [](const std::string& a, const std::string& b) {
    return !prove_logged(Sequent{Structure::leaf(parse_formula(a)), parse_formula(b)}).derivations.empty();
  };
  c.require(derivable("s0", "s+"), "s0 |- s+");
  c.require(derivable("s0", "s-"), "s0 |- s-");
  c.require(derivable("np", "[p]<p>np"), "np |- [p]<p>np");
  const std::array<const char*, 3> clauses{"s0", "s+", "s-"};
  int refuted = 0, others = 0;
  for (const char* a : clauses) {
    for (const char* b : clauses) {
      if (std::string(a) == "s0" && std::string(b) != "s0") continue;
      ++others;
      const bool d = derivable(a, b);
      if (std::string(a) == b)
        c.require(d, std::string(a) + " |- " + b + " (identity)");
      else
        c.require(!d, std::string(a) + " |- " + b + " derivable");
      refuted += !d;
    }
  }
  c.detail << (c.detail.tellp() > 0 ? "; " : "") << "3 derived; of the other " << others << " pairs, " << refuted
           << " refuted and " << others - refuted << " identities";
  return c.ok;
}

bool refutation(Check& c) {
  const Structure ante = antecedent_from_text("np *c ((1 * <>anybody) * <>saw)", lex());
  const Sequent goal{ante, Formula::negative_clause()};
  const auto a = prove_logged(goal);
  const auto b = prove_logged(goal, SearchBudget{}.scaled(2));
  c.require(a.derivations.empty(), "derivable at default budget");
  c.require(b.derivations.empty(), "derivable at doubled budget");
  c.detail << (c.detail.tellp() > 0 ? "; " : "") << "not derivable at default or doubled budget";
  return c.ok;
}

bool oracle_equivalence(Check& c) {
  const std::array<const char*, 5> qs{"a man", "nobody", "anybody", "somebody", "everybody"};
  int agree = 0;
  for (const char* q1 : qs) {
    for (const char* q2 : qs) {
      const std::string s = std::string(q1) + " saw " + q2;
      const auto r = parse(s);
      const auto predicted = fsm_readings(r);
      const bool same = (r.verdict == Verdict::Grammatical) == !predicted.empty() && reading_set(r) == predicted;
      agree += same;
      c.require(same, "'" + s + "'");
    }
  }
  c.detail << (c.detail.tellp() > 0 ? "; " : "") << agree << "/25 agree";
  return c.ok;
}

bool proof_audit(Check& c) {
  // The corpus adds every built-in sentence to the audit.
  for (const auto& o : run_corpus(builtin_corpus(), lex()))
    g_audit.insert(g_audit.end(), o.parse.derivations.begin(), o.parse.derivations.end());
  std::size_t valid = 0, round_trip = 0;
  for (const auto& d : g_audit) {
    valid += validate_derivation(d);
    const Derivation back = derivation_from_json(Json::parse(derivation_to_json(d).dump()));
    round_trip += back == d && validate_derivation(back) && render_derivation(back) == render_derivation(d);
  }
  c.require(!g_audit.empty(), "no derivations collected");
  c.require(valid == g_audit.size(), std::to_string(g_audit.size() - valid) + " invalid");
  c.require(round_trip == g_audit.size(), std::to_string(g_audit.size() - round_trip) + " changed by round trip");
  c.detail << (c.detail.tellp() > 0 ? "; " : "") << valid << "/" << g_audit.size() << " valid, " << round_trip
           << " survive the round trip";
  return c.ok;
}

bool monotonicity(Check& c) {
  for (unsigned n = 1; n <= FiniteModel::kMaxSize; ++n) {
    const FiniteModel m(n);
    c.require(is_downward_entailing(denotation("nobody", m), m), "nobody at n=" + std::to_string(n));
    if (n < 2) continue;
    c.require(!is_downward_entailing(denotation("somebody", m), m), "somebody at n=" + std::to_string(n));
    c.require(!is_downward_entailing(denotation("everybody", m), m), "everybody at n=" + std::to_string(n));
  }
  c.detail << (c.detail.tellp() > 0 ? "; " : "") << "n = 1..6";
  return c.ok;
}

std::optional<std::string> run_capture(const std::string& cmd) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return std::nullopt;
  std::string out;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0;) out.append(buf.data(), n);
  return out;
}

bool determinism(Check& c, const std::string& cli) {
  if (cli.empty()) {
    c.require(false, "no executable given");
    return false;
  }
  const std::string cmd = "'" + cli + "' corpus --json";
  const auto first = run_capture(cmd), second = run_capture(cmd);
  c.require(first && !first->empty(), "corpus --json produced no output");
  c.require(first == second, "corpus --json output differs between runs");

  int stayed = 0, grammatical = 0;
  for (const auto& line : builtin_corpus()) {
    if (parse(line.sentence).verdict != Verdict::Grammatical) continue;
    ++grammatical;
    const bool still = parse(line.sentence, SearchBudget{}.scaled(2)).verdict == Verdict::Grammatical;
    stayed += still;
    c.require(still, "'" + line.sentence + "' lost at doubled budget");
  }
  c.detail << (c.detail.tellp() > 0 ? "; " : "") << "identical output, " << stayed << "/" << grammatical
           << " stay grammatical at doubled budget";
  return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<const char*, std::function<bool(Check&)>>> criteria{
      {"acceptability table", acceptability},
      {"reading counts", reading_counts},
      {"scope prediction for three quantifiers", three_quantifiers},
      {"clause subtyping and polarity lemmas", subtyping},
      {"value-embedded anybody is refuted", refutation},
      {"prover and polarity machine agree on Q1 saw Q2", oracle_equivalence},
      {"proof audit", proof_audit},
      {"monotonicity", monotonicity},
      {"determinism and budget monotonicity", [&](Check& c) { return determinism(c, cli); }},
  };
  // The audit runs after everything else has added its derivations.
  std::vector<std::size_t> order{0, 1, 2, 3, 4, 5, 7, 8, 6};
  std::vector<std::string> lines(criteria.size());
  int failed = 0;
  for (std::size_t i : order) {
    Check c;
    bool ok = false;
    try {
      ok = criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    ok = ok && c.ok;
    failed += !ok;
    lines[i] = std::string(ok ? "PASS" : "FAIL") + "  " + std::to_string(i + 1) + ". " + criteria[i].first + " (" +
               c.detail.str() + ")";
  }
  for (const auto& l : lines) std::cout << l << '\n';
  return failed == 0 ? 0 : 1;
}
