// ASCII concrete syntax for formulas and structures.
//
//   formula := slash
//   slash   := prod (("/" | "/c" | "\" | "\c") prod)*
//   prod    := unary (("*" | "*c") unary)*
//   unary   := ("<>" | "<u>" | "<p>" | "[]" | "[u]" | "[p]") unary
//            | atom | "1" | "(" formula ")"
//
// "/" associates to the left, "\" to the right; the two may not be mixed at
// one level without parentheses.

#include <cctype>

#include "polarity/core.hpp"

namespace polarity {

namespace {

enum class Tok { LParen, RParen, Dia, Box, Prod, Over, Under, One, Ident, End };

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;
  UnaryMode umode = UnaryMode::Value;
  BinaryMode bmode = BinaryMode::Default;
  std::string text;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.pos = i_;
      if (i_ >= text_.size()) {
        t.kind = Tok::End;
        out.push_back(t);
        return out;
      }
      char c = text_[i_];
      if (c == '(') {
        t.kind = Tok::LParen;
        ++i_;
      } else if (c == ')') {
        t.kind = Tok::RParen;
        ++i_;
      } else if (c == '<' || c == '[') {
        t.kind = c == '<' ? Tok::Dia : Tok::Box;
        char close = c == '<' ? '>' : ']';
        ++i_;
        if (peek() == close) {
          t.umode = UnaryMode::Value;
          ++i_;
        } else if ((peek() == 'u' || peek() == 'p') && peek(1) == close) {
          t.umode = peek() == 'u' ? UnaryMode::U : UnaryMode::P;
          i_ += 2;
        } else {
          throw SyntaxError("malformed unary operator", t.pos);
        }
      } else if (c == '*' || c == '/' || c == '\\') {
        t.kind = c == '*' ? Tok::Prod : c == '/' ? Tok::Over : Tok::Under;
        ++i_;
        if (peek() == 'c' && !ident_char(peek(1))) {
          t.bmode = BinaryMode::C;
          ++i_;
        }
      } else if (c == '1' && !ident_char(peek(1))) {
        t.kind = Tok::One;
        ++i_;
      } else if (ident_start(c)) {
        std::size_t start = i_;
        while (i_ < text_.size() && ident_char(text_[i_])) ++i_;
        t.kind = Tok::Ident;
        t.text = std::string(text_.substr(start, i_ - start));
        if (t.text == "s" && (peek() == '+' || peek() == '-')) {
          t.text += text_[i_];
          ++i_;
        }
      } else {
        throw SyntaxError(std::string("unexpected character '") + c + "'", t.pos);
      }
      out.push_back(t);
    }
  }

 private:
  char peek(std::size_t k = 0) const { return i_ + k < text_.size() ? text_[i_ + k] : '\0'; }
  void skip_space() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  std::string_view text_;
  std::size_t i_ = 0;
};

class FormulaParser {
 public:
  explicit FormulaParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse() {
    Formula f = slash();
    if (cur().kind != Tok::End) throw SyntaxError("unexpected trailing input", cur().pos);
    return f;
  }

 private:
  const Token& cur() const { return toks_[i_]; }

  Formula slash() {
    std::vector<Formula> operands{prod()};
    std::vector<Token> ops;
    while (cur().kind == Tok::Over || cur().kind == Tok::Under) {
      if (!ops.empty() && ops.front().kind != cur().kind)
        throw SyntaxError("mixing / and \\ requires parentheses", cur().pos);
      ops.push_back(cur());
      ++i_;
      operands.push_back(prod());
    }
    if (ops.empty()) return operands.front();
    if (ops.front().kind == Tok::Over) {
      Formula acc = operands[0];
      for (std::size_t k = 0; k < ops.size(); ++k) acc = Formula::over(ops[k].bmode, acc, operands[k + 1]);
      return acc;
    }
    Formula acc = operands.back();
    for (std::size_t k = ops.size(); k-- > 0;) acc = Formula::under(ops[k].bmode, operands[k], acc);
    return acc;
  }

  Formula prod() {
    Formula acc = unary();
    while (cur().kind == Tok::Prod) {
      BinaryMode m = cur().bmode;
      ++i_;
      acc = Formula::product(m, acc, unary());
    }
    return acc;
  }

  Formula unary() {
    const Token t = cur();
    switch (t.kind) {
      case Tok::Dia:
        ++i_;
        return Formula::dia(t.umode, unary());
      case Tok::Box:
        ++i_;
        return Formula::box_down(t.umode, unary());
      case Tok::One:
        ++i_;
        return Formula::unit();
      case Tok::LParen: {
        ++i_;
        Formula f = slash();
        if (cur().kind != Tok::RParen) throw SyntaxError("expected ')'", cur().pos);
        ++i_;
        return f;
      }
      case Tok::Ident:
        ++i_;
        if (t.text == "s0") return Formula::neutral_clause();
        if (t.text == "s+") return Formula::positive_clause();
        if (t.text == "s-") return Formula::negative_clause();
        return Formula::atom(t.text);
      case Tok::End:
        throw SyntaxError("unexpected end of input", t.pos);
      default:
        throw SyntaxError("expected a formula", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

std::string unary_prefix(FormulaKind k, UnaryMode m) {
  std::string open = k == FormulaKind::Dia ? "<" : "[";
  std::string close = k == FormulaKind::Dia ? ">" : "]";
  return open + (m == UnaryMode::Value ? "" : std::string(to_string(m))) + close;
}

std::string_view binary_op(FormulaKind k, BinaryMode m) {
  switch (k) {
    case FormulaKind::Product: return m == BinaryMode::C ? " *c " : " * ";
    case FormulaKind::Over: return m == BinaryMode::C ? " /c " : " / ";
    default: return m == BinaryMode::C ? " \\c " : " \\ ";
  }
}

std::optional<std::string_view> abbreviation(const Formula& f) {
  if (f == Formula::neutral_clause()) return "s0";
  if (f == Formula::positive_clause()) return "s+";
  if (f == Formula::negative_clause()) return "s-";
  return std::nullopt;
}

// 0 = unary level, 1 = product, 2 = slash.
int level(const Formula& f) {
  if (abbreviation(f)) return 0;
  switch (f.kind()) {
    case FormulaKind::Product: return 1;
    case FormulaKind::Over:
    case FormulaKind::Under: return 2;
    default: return 0;
  }
}

std::string print_at(const Formula& f, int max_level);

std::string print_plain(const Formula& f) {
  if (auto a = abbreviation(f)) return std::string(*a);
  switch (f.kind()) {
    case FormulaKind::Atom: return f.name();
    case FormulaKind::Unit: return "1";
    case FormulaKind::Dia:
    case FormulaKind::BoxDown: return unary_prefix(f.kind(), f.unary_mode()) + print_at(f.body(), 0);
    case FormulaKind::Product:
      return print_at(f.left(), 1) + std::string(binary_op(f.kind(), f.binary_mode())) + print_at(f.right(), 0);
    case FormulaKind::Over: {
      const Formula res = f.left();
      std::string l = res.kind() == FormulaKind::Over ? print_plain(res) : print_at(res, 1);
      return l + std::string(binary_op(f.kind(), f.binary_mode())) + print_at(f.right(), 1);
    }
    case FormulaKind::Under: {
      const Formula res = f.right();
      std::string r = res.kind() == FormulaKind::Under ? print_plain(res) : print_at(res, 1);
      return print_at(f.left(), 1) + std::string(binary_op(f.kind(), f.binary_mode())) + r;
    }
  }
  return "?";
}

std::string print_at(const Formula& f, int max_level) {
  std::string s = print_plain(f);
  return level(f) > max_level ? "(" + s + ")" : s;
}

std::string print_structure_at(const Structure& s, bool words, int max_level);

std::string print_structure_plain(const Structure& s, bool words) {
  switch (s.kind()) {
    case StructureKind::Leaf:
      if (words && s.label()) {
        const std::string& w = s.label()->word;
        return w.find(' ') == std::string::npos ? w : "'" + w + "'";
      }
      return print_formula(s.formula());
    case StructureKind::Unit: return "1";
    case StructureKind::Un:
      return unary_prefix(FormulaKind::Dia, s.unary_mode()) + print_structure_at(s.body(), words, 0);
    case StructureKind::Bin:
      return print_structure_at(s.left(), words, 1) +
             std::string(binary_op(FormulaKind::Product, s.binary_mode())) +
             print_structure_at(s.right(), words, 0);
  }
  return "?";
}

int structure_level(const Structure& s, bool words) {
  if (s.is(StructureKind::Bin)) return 1;
  if (s.is(StructureKind::Leaf) && !(words && s.label())) return level(s.formula());
  return 0;
}

std::string print_structure_at(const Structure& s, bool words, int max_level) {
  std::string out = print_structure_plain(s, words);
  return structure_level(s, words) > max_level ? "(" + out + ")" : out;
}

}  // namespace

Formula parse_formula(std::string_view text) {
  return FormulaParser(Lexer(text).run()).parse();
}

std::string print_formula(const Formula& f) { return print_plain(f); }

std::string print_structure(const Structure& s, bool words) {
  return print_structure_plain(s, words);
}

std::string print_sequent(const Sequent& s, bool words) {
  return print_structure(s.antecedent, words) + " |- " + print_formula(s.succedent);
}

}  // namespace polarity
