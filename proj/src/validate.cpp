// Proof checker. Each node is checked forward from its own conclusion and
// premises, without going through the search's rewrite code.

#include "polarity/prover.hpp"

namespace polarity {

namespace {

using S = Structure;
constexpr auto kDef = BinaryMode::Default;
constexpr auto kC = BinaryMode::C;
constexpr auto kValue = UnaryMode::Value;

bool unlabeled_leaf(const S& s, const Formula& f) {
  return s.is(StructureKind::Leaf) && !s.label() && s.formula() == f;
}

// Expected premise antecedent for a structural postulate applied at `n`,
// written directly from the postulate table.
std::optional<S> postulate(RuleKind k, const S& n) {
  switch (k) {
    case RuleKind::RootFwd:
      return S::bin(kC, n, S::unit());
    case RuleKind::RootBwd:
      if (n.is(StructureKind::Bin) && n.binary_mode() == kC && n.right().is(StructureKind::Unit))
        return n.left();
      return std::nullopt;
    case RuleKind::LeftFwd: {
      // (B * C) *c K  =>  B *c (C * K)
      if (!n.is_bin(kC) || !n.left().is_bin(kDef)) return std::nullopt;
      const S b = n.left().left(), c = n.left().right(), k2 = n.right();
      return S::bin(kC, b, S::bin(kDef, c, k2));
    }
    case RuleKind::LeftBwd: {
      if (!n.is_bin(kC) || !n.right().is_bin(kDef)) return std::nullopt;
      const S b = n.left(), c = n.right().left(), k2 = n.right().right();
      return S::bin(kC, S::bin(kDef, b, c), k2);
    }
    case RuleKind::RightFwd: {
      // (<>B * C) *c K  =>  C *c (K * <>B)
      if (!n.is_bin(kC) || !n.left().is_bin(kDef)) return std::nullopt;
      const S db = n.left().left(), c = n.left().right(), k2 = n.right();
      if (!db.is_un(kValue)) return std::nullopt;
      return S::bin(kC, c, S::bin(kDef, k2, db));
    }
    case RuleKind::RightBwd: {
      if (!n.is_bin(kC) || !n.right().is_bin(kDef)) return std::nullopt;
      const S c = n.left(), k2 = n.right().left(), db = n.right().right();
      if (!db.is_un(kValue)) return std::nullopt;
      return S::bin(kC, S::bin(kDef, db, c), k2);
    }
    case RuleKind::T:
      return S::un(kValue, n);
    case RuleKind::KPrime:
      if (!n.is_bin(kDef) || !n.left().is_un(kValue) || !n.right().is_un(kValue)) return std::nullopt;
      return S::un(kValue, S::bin(kDef, n.left().body(), n.right().body()));
    case RuleKind::UnquoteAnte:
      if (!n.is_un(kValue) || !n.body().is_un(UnaryMode::U)) return std::nullopt;
      return n.body();
    default:
      return std::nullopt;
  }
}

bool check_node(const Derivation& d) {
  const S& g = d.conclusion.antecedent;
  const Formula& c = d.conclusion.succedent;
  const auto& p = d.premises;
  const Rule& r = d.rule;
  auto one = [&]() { return p.size() == 1; };

  switch (r.kind) {
    case RuleKind::Axiom:
      return p.empty() && d.site.empty() && g.is(StructureKind::Leaf) && g.formula() == c;
    case RuleKind::Lex:
      return p.empty() && d.site.empty() && g.is(StructureKind::Leaf) && g.label() && g.formula() == c;

    case RuleKind::OverR:
    case RuleKind::UnderR: {
      const bool over = r.kind == RuleKind::OverR;
      if (!one() || !d.site.empty()) return false;
      if (!c.is(over ? FormulaKind::Over : FormulaKind::Under) || c.binary_mode() != r.binary) return false;
      const S& pa = p[0].conclusion.antecedent;
      if (!pa.is_bin(r.binary) || p[0].conclusion.succedent != c.result()) return false;
      return over ? (pa.left() == g && unlabeled_leaf(pa.right(), c.argument()))
                  : (pa.right() == g && unlabeled_leaf(pa.left(), c.argument()));
    }
    case RuleKind::BoxDownR: {
      if (!one() || !d.site.empty()) return false;
      if (!c.is(FormulaKind::BoxDown) || c.unary_mode() != r.unary) return false;
      const S& pa = p[0].conclusion.antecedent;
      return pa.is_un(r.unary) && pa.body() == g && p[0].conclusion.succedent == c.body();
    }
    case RuleKind::DiaR: {
      if (!one() || !d.site.empty()) return false;
      if (!c.is(FormulaKind::Dia) || c.unary_mode() != r.unary || !g.is_un(r.unary)) return false;
      return p[0].conclusion.antecedent == g.body() && p[0].conclusion.succedent == c.body();
    }
    case RuleKind::ProdR: {
      if (p.size() != 2 || !d.site.empty()) return false;
      if (!c.is(FormulaKind::Product) || c.binary_mode() != r.binary || !g.is_bin(r.binary)) return false;
      return p[0].conclusion == Sequent{g.left(), c.left()} && p[1].conclusion == Sequent{g.right(), c.right()};
    }
    case RuleKind::OverL:
    case RuleKind::UnderL: {
      const bool over = r.kind == RuleKind::OverL;
      if (p.size() != 2) return false;
      const S n = g.at(d.site);
      if (!n.is_bin(r.binary)) return false;
      const S fn = over ? n.left() : n.right();
      const S arg = over ? n.right() : n.left();
      if (!fn.is(StructureKind::Leaf)) return false;
      const Formula& f = fn.formula();
      if (!f.is(over ? FormulaKind::Over : FormulaKind::Under) || f.binary_mode() != r.binary) return false;
      const Formula res = over ? f.left() : f.right();
      const Formula want = over ? f.right() : f.left();
      return p[0].conclusion == Sequent{g.replace(d.site, S::leaf(res)), c} &&
             p[1].conclusion == Sequent{arg, want};
    }
    case RuleKind::DiaL: {
      if (!one()) return false;
      const S n = g.at(d.site);
      if (!n.is(StructureKind::Leaf) || !n.formula().is(FormulaKind::Dia) || n.formula().unary_mode() != r.unary)
        return false;
      const S expect = S::un(r.unary, S::leaf(n.formula().body(), n.label()));
      return p[0].conclusion == Sequent{g.replace(d.site, expect), c};
    }
    case RuleKind::ProdL: {
      if (!one()) return false;
      const S n = g.at(d.site);
      if (!n.is(StructureKind::Leaf) || !n.formula().is(FormulaKind::Product) ||
          n.formula().binary_mode() != r.binary)
        return false;
      const S expect = S::bin(r.binary, S::leaf(n.formula().left()), S::leaf(n.formula().right()));
      return p[0].conclusion == Sequent{g.replace(d.site, expect), c};
    }
    case RuleKind::BoxDownL: {
      if (!one()) return false;
      const S n = g.at(d.site);
      if (!n.is_un(r.unary) || !n.body().is(StructureKind::Leaf)) return false;
      const Formula& f = n.body().formula();
      if (!f.is(FormulaKind::BoxDown) || f.unary_mode() != r.unary) return false;
      return p[0].conclusion == Sequent{g.replace(d.site, S::leaf(f.body(), n.body().label())), c};
    }
    case RuleKind::UnquoteSucc: {
      if (!one() || !d.site.empty()) return false;
      if (!c.is(FormulaKind::Dia) || c.unary_mode() != UnaryMode::U) return false;
      return p[0].conclusion == Sequent{g, Formula::dia(kValue, c)};
    }
    default: {
      if (!one()) return false;
      auto expect = postulate(r.kind, g.at(d.site));
      if (!expect) return false;
      return p[0].conclusion == Sequent{g.replace(d.site, *expect), c};
    }
  }
}

}  // namespace

bool validate_derivation(const Derivation& d) {
  try {
    if (!check_node(d)) return false;
  } catch (const std::exception&) {
    return false;
  }
  for (const auto& p : d.premises)
    if (!validate_derivation(p)) return false;
  return true;
}

}  // namespace polarity
