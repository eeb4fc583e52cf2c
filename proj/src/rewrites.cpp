#include <array>
#include <functional>
#include <stdexcept>

#include "polarity/prover.hpp"

namespace polarity {

namespace {

struct RuleInfo {
  RuleKind kind;
  const char* name;
  const char* display;
  int family;  // 0 none, 1 binary, 2 unary
};

constexpr std::array<RuleInfo, 22> kRules{{
    {RuleKind::Axiom, "Axiom", "Axiom", 0},
    {RuleKind::Lex, "Lex", "Lex", 0},
    {RuleKind::ProdR, "ProdR", "•I", 1},
    {RuleKind::ProdL, "ProdL", "•E", 1},
    {RuleKind::OverR, "OverR", "/I", 1},
    {RuleKind::OverL, "OverL", "/E", 1},
    {RuleKind::UnderR, "UnderR", "\\I", 1},
    {RuleKind::UnderL, "UnderL", "\\E", 1},
    {RuleKind::DiaR, "DiaR", "◇I", 2},
    {RuleKind::DiaL, "DiaL", "◇E", 2},
    {RuleKind::BoxDownR, "BoxDownR", "□↓I", 2},
    {RuleKind::BoxDownL, "BoxDownL", "□↓E", 2},
    {RuleKind::RootFwd, "Root->", "Root", 0},
    {RuleKind::RootBwd, "Root<-", "Root", 0},
    {RuleKind::LeftFwd, "Left->", "Left", 0},
    {RuleKind::LeftBwd, "Left<-", "Left", 0},
    {RuleKind::RightFwd, "Right->", "Right", 0},
    {RuleKind::RightBwd, "Right<-", "Right", 0},
    {RuleKind::T, "T", "T", 0},
    {RuleKind::KPrime, "K'", "K′", 0},
    {RuleKind::UnquoteAnte, "UnquoteAnte", "Unquote", 0},
    {RuleKind::UnquoteSucc, "UnquoteSucc", "Unquote", 0},
}};

const RuleInfo& info(RuleKind k) { return kRules[static_cast<std::size_t>(k)]; }

}  // namespace

bool Rule::has_binary_mode() const { return info(kind).family == 1; }
bool Rule::has_unary_mode() const { return info(kind).family == 2; }
bool Rule::is_structural() const { return kind >= RuleKind::RootFwd; }

bool operator==(const Rule& a, const Rule& b) {
  if (a.kind != b.kind) return false;
  if (a.has_binary_mode()) return a.binary == b.binary;
  if (a.has_unary_mode()) return a.unary == b.unary;
  return true;
}

bool operator<(const Rule& a, const Rule& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.has_binary_mode()) return a.binary < b.binary;
  if (a.has_unary_mode()) return a.unary < b.unary;
  return false;
}

std::string to_string(const Rule& r) {
  std::string out = info(r.kind).name;
  if (r.has_binary_mode()) out += "(" + std::string(to_string(r.binary)) + ")";
  if (r.has_unary_mode()) out += "(" + std::string(to_string(r.unary)) + ")";
  return out;
}

Rule parse_rule(std::string_view text) {
  std::string_view base = text;
  std::string_view mode;
  if (auto open = text.find('('); open != std::string_view::npos && text.back() == ')') {
    base = text.substr(0, open);
    mode = text.substr(open + 1, text.size() - open - 2);
  }
  for (const auto& ri : kRules) {
    if (base != ri.name) continue;
    Rule r = Rule::of(ri.kind);
    if (ri.family == 1) {
      if (mode == "def") r.binary = BinaryMode::Default;
      else if (mode == "c") r.binary = BinaryMode::C;
      else throw std::invalid_argument("bad binary mode in rule '" + std::string(text) + "'");
    } else if (ri.family == 2) {
      if (mode == "value") r.unary = UnaryMode::Value;
      else if (mode == "u") r.unary = UnaryMode::U;
      else if (mode == "p") r.unary = UnaryMode::P;
      else throw std::invalid_argument("bad unary mode in rule '" + std::string(text) + "'");
    } else if (!mode.empty()) {
      throw std::invalid_argument("rule '" + std::string(base) + "' takes no mode");
    }
    return r;
  }
  throw std::invalid_argument("unknown rule '" + std::string(text) + "'");
}

std::string display_name(const Rule& r) {
  std::string d = info(r.kind).display;
  std::string m;
  if (r.has_binary_mode() && r.binary == BinaryMode::C) m = "c";
  if (r.has_unary_mode() && r.unary != UnaryMode::Value) m = std::string(to_string(r.unary));
  if (m.empty()) return d;
  // Mode goes just before the trailing I/E letter.
  return d.substr(0, d.size() - 1) + m + d.back();
}

std::size_t Derivation::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

int SearchBudget::t_insertions_for(const Sequent& goal) const {
  if (max_t_insertions) return *max_t_insertions;
  return (static_cast<int>(goal.antecedent.leaf_count()) + 2) * t_factor;
}

SearchBudget SearchBudget::scaled(int factor) const {
  SearchBudget b = *this;
  b.max_structural_steps *= factor;
  b.max_derivations *= factor;
  if (b.max_t_insertions)
    *b.max_t_insertions *= factor;
  else
    b.t_factor *= factor;
  return b;
}

std::optional<Structure> apply_structural(RuleKind k, const Structure& ante, const Site& site) {
  const Structure n = ante.at(site);
  const auto def = BinaryMode::Default;
  const auto c = BinaryMode::C;
  const auto v = UnaryMode::Value;
  std::optional<Structure> out;
  switch (k) {
    case RuleKind::RootFwd:
      out = Structure::bin(c, n, Structure::unit());
      break;
    case RuleKind::RootBwd:
      if (n.is_bin(c) && n.right().is(StructureKind::Unit)) out = n.left();
      break;
    case RuleKind::LeftFwd:
      if (n.is_bin(c) && n.left().is_bin(def))
        out = Structure::bin(c, n.left().left(), Structure::bin(def, n.left().right(), n.right()));
      break;
    case RuleKind::LeftBwd:
      if (n.is_bin(c) && n.right().is_bin(def))
        out = Structure::bin(c, Structure::bin(def, n.left(), n.right().left()), n.right().right());
      break;
    case RuleKind::RightFwd:
      if (n.is_bin(c) && n.left().is_bin(def) && n.left().left().is_un(v))
        out = Structure::bin(c, n.left().right(), Structure::bin(def, n.right(), n.left().left()));
      break;
    case RuleKind::RightBwd:
      if (n.is_bin(c) && n.right().is_bin(def) && n.right().right().is_un(v))
        out = Structure::bin(c, Structure::bin(def, n.right().right(), n.left()), n.right().left());
      break;
    case RuleKind::T:
      out = Structure::un(v, n);
      break;
    case RuleKind::KPrime:
      if (n.is_bin(def) && n.left().is_un(v) && n.right().is_un(v))
        out = Structure::un(v, Structure::bin(def, n.left().body(), n.right().body()));
      break;
    case RuleKind::UnquoteAnte:
      if (n.is_un(v) && n.body().is_un(UnaryMode::U)) out = n.body();
      break;
    default:
      throw std::invalid_argument("not an antecedent rewrite: " + to_string(Rule::of(k)));
  }
  if (!out) return std::nullopt;
  return ante.replace(site, *out);
}

std::vector<Rewrite> enumerate_rewrites(const Sequent& s, const SearchBudget& budget) {
  static constexpr std::array<RuleKind, 9> kAnte{
      RuleKind::RootFwd, RuleKind::RootBwd, RuleKind::LeftFwd, RuleKind::LeftBwd, RuleKind::RightFwd,
      RuleKind::RightBwd, RuleKind::T, RuleKind::KPrime, RuleKind::UnquoteAnte};
  const bool t_available = budget.t_insertions_for(s) > 0;
  const auto sites = s.antecedent.sites();
  std::vector<Rewrite> out;
  for (RuleKind k : kAnte) {
    if (k == RuleKind::T && !t_available) continue;
    for (const auto& site : sites) {
      if (auto a = apply_structural(k, s.antecedent, site))
        out.push_back(Rewrite{Rule::of(k), site, {Sequent{*a, s.succedent}}});
    }
  }
  if (s.succedent.is(FormulaKind::Dia) && s.succedent.unary_mode() == UnaryMode::U) {
    out.push_back(Rewrite{Rule::of(RuleKind::UnquoteSucc),
                          {},
                          {Sequent{s.antecedent, Formula::dia(UnaryMode::Value, s.succedent)}}});
  }
  return out;
}

}  // namespace polarity
