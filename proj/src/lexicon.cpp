#include "polarity/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace polarity {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string join(const std::vector<std::string>& words, std::size_t from, std::size_t n) {
  std::string out;
  for (std::size_t i = from; i < from + n; ++i) {
    if (i > from) out += ' ';
    out += words[i];
  }
  return out;
}

std::string normalize_key(std::string_view word) {
  auto words = split_words(to_lower(word));
  return join(words, 0, words.size());
}

bool is_punct(char c) {
  return c == '.' || c == ',' || c == '!' || c == '?' || c == ';' || c == ':' || c == '"' || c == '(' ||
         c == ')';
}

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void Lexicon::add(std::string_view word, Formula type) {
  std::string key = normalize_key(word);
  if (key.empty()) throw std::invalid_argument("empty lexicon word");
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const auto& e) { return e.word == key; });
  if (it == entries_.end()) {
    longest_ = std::max(longest_, split_words(key).size());
    entries_.push_back(LexiconEntry{std::move(key), {std::move(type)}});
  } else if (std::find(it->types.begin(), it->types.end(), type) == it->types.end()) {
    it->types.push_back(std::move(type));
  }
}

const LexiconEntry* Lexicon::find(std::string_view word) const {
  const std::string key = normalize_key(word);
  for (const auto& e : entries_)
    if (e.word == key) return &e;
  return nullptr;
}

Lexicon default_lexicon() {
  static const char* const kText =
      "alice := np\n"
      "bob := np\n"
      "saw := (np \\ s0) / np\n"
      "introduced := ((np \\ s0) / pp) / np\n"
      "to := pp / np\n"
      "'s mother := np \\ np\n"
      "'s father := np \\ np\n"
      "a man := s0 /c (np \\c s0)\n"
      "nobody := s0 /c (np \\c s-)\n"
      "anybody := s- /c (np \\c s-)\n"
      "somebody := s+ /c (np \\c s+)\n"
      "everybody := s0 /c (np \\c s+)\n";
  static const Lexicon lex = load_lexicon(kText);
  return lex;
}

Lexicon load_lexicon(std::string_view text) {
  Lexicon lex;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string content = trim(line);
    if (content.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto sep = content.find(":=");
    if (sep == std::string::npos) throw LexiconError("expected 'word := formula'", line_no);
    const std::string word = trim(std::string_view(content).substr(0, sep));
    if (word.empty()) throw LexiconError("missing word before ':='", line_no);
    try {
      lex.add(word, parse_formula(std::string_view(content).substr(sep + 2)));
    } catch (const SyntaxError& e) {
      throw LexiconError(e.what(), line_no);
    }
    if (end == text.size()) break;
  }
  return lex;
}

std::string print_lexicon(const Lexicon& lex) {
  std::string out;
  for (const auto& e : lex.entries())
    for (const auto& t : e.types) out += e.word + " := " + print_formula(t) + "\n";
  return out;
}

std::vector<std::string> tokenize(std::string_view sentence, const Lexicon& lex) {
  std::string text(sentence);
  // Typographic apostrophe (U+2019) to ASCII.
  for (std::size_t p; (p = text.find("\xE2\x80\x99")) != std::string::npos;) text.replace(p, 3, "'");

  std::vector<std::string> words;
  for (std::string w : split_words(to_lower(text))) {
    while (!w.empty() && is_punct(w.back())) w.pop_back();
    while (!w.empty() && is_punct(w.front())) w.erase(w.begin());
    if (w.empty()) continue;
    if (w.size() > 2 && w.ends_with("'s") && !lex.find(w)) {
      words.push_back(w.substr(0, w.size() - 2));
      words.push_back("'s");
    } else {
      words.push_back(w);
    }
  }

  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < words.size();) {
    std::size_t take = 0;
    for (std::size_t k = std::min(lex.longest_key(), words.size() - i); k >= 1; --k) {
      if (lex.find(join(words, i, k))) {
        take = k;
        break;
      }
    }
    if (take == 0) throw UnknownWord(words[i], i);
    tokens.push_back(join(words, i, take));
    i += take;
  }
  return tokens;
}

}  // namespace polarity
