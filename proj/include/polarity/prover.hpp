// Bounded backward proof search for the multimodal logic: the logical rules
// in sequent form plus the structural postulates Root, Left, Right, T, K'
// and Unquote.

#ifndef POLARITY_PROVER_HPP_
#define POLARITY_PROVER_HPP_

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "polarity/core.hpp"

namespace polarity {

enum class RuleKind : std::uint8_t {
  Axiom,
  Lex,
  ProdR,
  ProdL,
  OverR,
  OverL,
  UnderR,
  UnderL,
  DiaR,
  DiaL,
  BoxDownR,
  BoxDownL,
  RootFwd,   // Delta  ~>  Delta *c 1
  RootBwd,   // Delta *c 1  ~>  Delta
  LeftFwd,   // (B * C) *c K  ~>  B *c (C * K)
  LeftBwd,
  RightFwd,  // (<>B * C) *c K  ~>  C *c (K * <>B)
  RightBwd,
  T,         // Delta  ~>  <>Delta
  KPrime,    // <>D1 * <>D2  ~>  <>(D1 * D2)
  UnquoteAnte,  // <><u>Delta  ~>  <u>Delta
  UnquoteSucc,  // goal |- <u>A  ~>  goal |- <><u>A
};

/// A rule tag together with the mode it is instantiated at. Only the mode
/// matching the rule's family is significant.
struct Rule {
  RuleKind kind = RuleKind::Axiom;
  BinaryMode binary = BinaryMode::Default;
  UnaryMode unary = UnaryMode::Value;

  static Rule of(RuleKind k) { return Rule{k, BinaryMode::Default, UnaryMode::Value}; }
  static Rule of(RuleKind k, BinaryMode m) { return Rule{k, m, UnaryMode::Value}; }
  static Rule of(RuleKind k, UnaryMode m) { return Rule{k, BinaryMode::Default, m}; }

  bool has_binary_mode() const;
  bool has_unary_mode() const;
  bool is_structural() const;

  friend bool operator==(const Rule& a, const Rule& b);
  friend bool operator<(const Rule& a, const Rule& b);
};

/// Machine name, e.g. "OverL(c)", "DiaR(u)", "Root->", "K'".
std::string to_string(const Rule& r);
/// Inverse of to_string; throws std::invalid_argument.
Rule parse_rule(std::string_view text);
/// Display name in the style of proof trees: "/cE", "\I", "◇pI", "□↓pI", "Root", "K′", ...
std::string display_name(const Rule& r);

struct Derivation {
  Rule rule;
  Site site;  // into the conclusion's antecedent; empty for succedent rules
  Sequent conclusion;
  // OverL/UnderL: {main, side}; ProdR: {left, right}; otherwise at most one.
  std::vector<Derivation> premises;

  std::size_t size() const;
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

struct SearchBudget {
  int max_structural_steps = 64;       // per focusing or evaluation macro
  std::optional<int> max_t_insertions;  // unset: antecedent leaves + 2
  int t_factor = 1;                     // multiplies the unset default
  int max_derivations = 16;
  bool memo_enabled = true;
  std::chrono::milliseconds time_limit{0};  // 0 = unlimited

  int t_insertions_for(const Sequent& goal) const;
  SearchBudget scaled(int factor) const;
};

struct ProveResult {
  std::vector<Derivation> derivations;
  bool budget_exhausted = false;
  bool timed_out = false;
  std::size_t closure_states = 0;
};

/// Returns derivations with pairwise distinct scope orders, in a fixed order.
ProveResult prove(const Sequent& goal, const SearchBudget& budget = {});

/// Independent local check of every node.
bool validate_derivation(const Derivation& d);

struct Rewrite {
  Rule rule;
  Site site;
  std::vector<Sequent> goals;
};

/// Every single-step backward application of a structural postulate at `s`.
/// Ordered by rule tag, then site.
std::vector<Rewrite> enumerate_rewrites(const Sequent& s, const SearchBudget& budget = {});

// Primitive backward rewrites at one site; nullopt when the pattern does not
// match. Shared by enumerate_rewrites and the search.
std::optional<Structure> apply_structural(RuleKind k, const Structure& ante, const Site& site);

}  // namespace polarity

#endif  // POLARITY_PROVER_HPP_
