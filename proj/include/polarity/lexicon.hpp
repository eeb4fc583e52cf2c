#ifndef POLARITY_LEXICON_HPP_
#define POLARITY_LEXICON_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polarity/core.hpp"

namespace polarity {

struct LexiconEntry {
  std::string word;  // lowercase; multiword items are space-separated
  std::vector<Formula> types;
  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

class Lexicon {
 public:
  /// Adds `type` to `word`, creating the entry if needed.
  void add(std::string_view word, Formula type);

  /// Case-insensitive lookup; nullptr when absent.
  const LexiconEntry* find(std::string_view word) const;

  /// Entries in insertion order.
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Largest number of space-separated words in any key.
  std::size_t longest_key() const { return longest_; }

  friend bool operator==(const Lexicon&, const Lexicon&) = default;

 private:
  std::vector<LexiconEntry> entries_;
  std::size_t longest_ = 0;
};

class LexiconError : public std::runtime_error {
 public:
  LexiconError(const std::string& msg, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UnknownWord : public std::runtime_error {
 public:
  UnknownWord(std::string word, std::size_t position)
      : std::runtime_error("unknown word '" + word + "' at token " + std::to_string(position)),
        word_(std::move(word)),
        position_(position) {}
  const std::string& word() const { return word_; }
  std::size_t position() const { return position_; }

 private:
  std::string word_;
  std::size_t position_;
};

Lexicon default_lexicon();

/// One `word or multi word := formula` per line; `#` starts a comment.
Lexicon load_lexicon(std::string_view text);
std::string print_lexicon(const Lexicon& lex);

/// Lowercases, strips punctuation, splits off possessive "'s" and merges
/// multiword keys greedily, longest first.
std::vector<std::string> tokenize(std::string_view sentence, const Lexicon& lex);

std::string to_lower(std::string_view s);

}  // namespace polarity

#endif  // POLARITY_LEXICON_HPP_
