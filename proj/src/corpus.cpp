#include "polarity/corpus.hpp"

#include <algorithm>

namespace polarity {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t p; (p = s.find(sep, start)) != std::string_view::npos; start = p + 1)
    out.push_back(s.substr(start, p - start));
  out.push_back(s.substr(start));
  return out;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

const LexiconEntry* word_of(const Formula& f, const Lexicon& lex) {
  if (!f.is(FormulaKind::Atom)) return nullptr;
  std::string name = f.name();
  std::replace(name.begin(), name.end(), '_', ' ');
  return lex.find(name);
}

bool mentions_word(const Formula& f, const Lexicon& lex) {
  switch (f.kind()) {
    case FormulaKind::Atom: return word_of(f, lex) != nullptr;
    case FormulaKind::Unit: return false;
    case FormulaKind::Dia:
    case FormulaKind::BoxDown: return mentions_word(f.body(), lex);
    default: return mentions_word(f.left(), lex) || mentions_word(f.right(), lex);
  }
}

Structure build(const Formula& f, const Lexicon& lex, bool in_product, std::size_t& position) {
  if (const LexiconEntry* e = word_of(f, lex)) {
    if (e->types.size() != 1) throw std::invalid_argument("'" + e->word + "' has more than one lexical type");
    return Structure::leaf(e->types.front(), Label{e->word, position++});
  }
  if (f.is(FormulaKind::Unit) && in_product) return Structure::unit();
  if (f.is(FormulaKind::Product) && mentions_word(f, lex)) {
    Structure left = build(f.left(), lex, true, position);
    return Structure::bin(f.binary_mode(), std::move(left), build(f.right(), lex, true, position));
  }
  if (f.is(FormulaKind::Dia) && mentions_word(f, lex))
    return Structure::un(f.unary_mode(), build(f.body(), lex, false, position));
  return Structure::leaf(f);
}

}  // namespace

std::vector<CorpusLine> load_corpus(std::string_view text) {
  std::vector<CorpusLine> out;
  std::size_t line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (strip(raw).empty()) continue;
    const auto fields = split(raw, '\t');
    if (fields.size() < 2 || fields.size() > 3) throw CorpusError("expected sentence<TAB>ok|bad[<TAB>count]", line_no);
    CorpusLine line;
    line.sentence = std::string(strip(fields[0]));
    if (line.sentence.empty()) throw CorpusError("empty sentence", line_no);
    const auto verdict = strip(fields[1]);
    if (verdict == "ok")
      line.expected_ok = true;
    else if (verdict == "bad")
      line.expected_ok = false;
    else
      throw CorpusError("verdict must be 'ok' or 'bad'", line_no);
    if (fields.size() == 3) {
      const std::string count(strip(fields[2]));
      if (count.empty() || !std::all_of(count.begin(), count.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw CorpusError("reading count must be a number", line_no);
      line.expected_readings = std::stoul(count);
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::string print_corpus(const std::vector<CorpusLine>& lines) {
  std::string out;
  for (const auto& l : lines) {
    out += l.sentence + '\t' + (l.expected_ok ? "ok" : "bad");
    if (l.expected_readings) out += '\t' + std::to_string(*l.expected_readings);
    out += '\n';
  }
  return out;
}

const std::vector<CorpusLine>& builtin_corpus() {
  static const std::vector<CorpusLine> corpus = load_corpus(
      "Alice saw Bob\tok\t1\n"
      "Alice saw a man's mother\tok\t1\n"
      "Nobody saw anybody\tok\t1\n"
      "Everybody saw anybody\tbad\n"
      "Alice saw anybody\tbad\n"
      "Anybody saw nobody\tbad\n"
      "Nobody's mother saw anybody's father\tok\t1\n"
      "Anybody's mother saw nobody's father\tbad\n"
      "Somebody saw everybody\tok\t2\n"
      "Nobody introduced Alice to somebody\tok\t1\n");
  return corpus;
}

std::vector<ScopeItem> quantifier_occurrences(const std::vector<std::string>& tokens, const PolarityMachine& m) {
  std::vector<ScopeItem> out;
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (m.has_quantifier(tokens[i])) out.push_back(ScopeItem{tokens[i], i});
  return out;
}

CorpusOutcome run_corpus_line(const CorpusLine& line, const Lexicon& lex, const SearchBudget& budget) {
  CorpusOutcome o;
  o.line = line;
  o.parse = parse_sentence(line.sentence, lex, budget);
  const PolarityMachine m = machine_from_lexicon(lex);
  o.predicted = predict(m, quantifier_occurrences(o.parse.tokens, m));

  const bool parsed = o.parse.verdict == Verdict::Grammatical;
  o.prover_ok = parsed == line.expected_ok &&
                (!line.expected_readings || o.parse.readings.size() == *line.expected_readings);
  o.fsm_ok = !o.predicted.empty() == line.expected_ok;
  const std::set<Reading> proved(o.parse.readings.begin(), o.parse.readings.end());
  o.agreement = proved == o.predicted;
  return o;
}

std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusLine>& lines, const Lexicon& lex,
                                      const SearchBudget& budget) {
  std::vector<CorpusOutcome> out;
  for (const auto& l : lines) out.push_back(run_corpus_line(l, lex, budget));
  return out;
}

Structure antecedent_from_text(std::string_view text, const Lexicon& lex) {
  std::size_t position = 0;
  return build(parse_formula(text), lex, false, position);
}

}  // namespace polarity
