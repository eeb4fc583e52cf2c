#include <random>

#include <doctest.h>

#include "polarity/core.hpp"
#include "support.hpp"

using namespace polarity;
using namespace polarity::test;

namespace {

constexpr auto kDef = BinaryMode::Default;
constexpr auto kC = BinaryMode::C;

Formula random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  const BinaryMode bm = rng() % 2 ? kC : kDef;
  const UnaryMode um = static_cast<UnaryMode>(rng() % 3);
  static const char* const atoms[] = {"np", "s", "pp", "n", "x'"};
  switch (pick(rng)) {
    case 0: return Formula::atom(atoms[rng() % 5]);
    case 1: return rng() % 4 ? Formula::atom(atoms[rng() % 5]) : Formula::unit();
    case 2: return Formula::product(bm, random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 3: return Formula::over(bm, random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 4: return Formula::under(bm, random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 5: return Formula::dia(um, random_formula(rng, depth - 1));
    default: return Formula::box_down(um, random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("atoms and clause abbreviations") {
  CHECK(F("np") == Formula::atom("np"));
  CHECK(F("s0") == Formula::dia(UnaryMode::U, Formula::atom("s")));
  CHECK(F("s-") == Formula::box_down(UnaryMode::P, Formula::dia(UnaryMode::P, Formula::dia(UnaryMode::U, Formula::atom("s")))));
  CHECK(F("s+") == F("<u>[p]<p>s"));
  CHECK(F("s0") == Formula::neutral_clause());
  CHECK(F("s+") == Formula::positive_clause());
  CHECK(F("s-") == Formula::negative_clause());
}

TEST_CASE("quantifier type for nobody") {
  const Formula s = Formula::atom("s");
  const Formula expect = Formula::over(
      kC, Formula::dia(UnaryMode::U, s),
      Formula::under(kC, Formula::atom("np"),
                     Formula::box_down(UnaryMode::P, Formula::dia(UnaryMode::P, Formula::dia(UnaryMode::U, s)))));
  CHECK(F(kNobody) == expect);
  CHECK(F(kNobody).is(FormulaKind::Over));
  CHECK(F(kNobody).binary_mode() == kC);
  CHECK(F(kNobody).result() == F("s0"));
  CHECK(F(kNobody).argument() == F("np \\c s-"));
}

TEST_CASE("slash associativity") {
  CHECK(F("a / b / c") == F("(a / b) / c"));
  CHECK(F("a \\ b \\ c") == F("a \\ (b \\ c)"));
  CHECK(F("a * b * c") == F("(a * b) * c"));
  CHECK(F("a * b / c") == F("(a * b) / c"));
  CHECK(F("<>a * b") == F("(<>a) * b"));
  CHECK_THROWS_AS(F("a / b \\ c"), SyntaxError);
}

TEST_CASE("printing uses abbreviations and reparses") {
  CHECK(print_formula(F("np")) == "np");
  CHECK(print_formula(Formula::dia(UnaryMode::U, Formula::atom("s"))) == "s0");
  CHECK(print_formula(F("<u>[p]<p>s")) == "s+");
  CHECK(print_formula(F("[p]<p><u>s")) == "s-");
  CHECK(print_formula(F(kSaw)) == "(np \\ s0) / np");
  CHECK(print_formula(F(kNobody)) == "s0 /c (np \\c s-)");
  CHECK(print_formula(F("<p>s0")) == "<p>s0");
  CHECK(print_formula(F("1")) == "1");
}

TEST_CASE("syntax errors carry a position") {
  for (const char* bad : {"", "(np", "np)", "np /", "<q>np", "np np", "/ np", "a *c"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(F(bad), SyntaxError);
  }
  try {
    F("np / (s");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 7);
  }
}

TEST_CASE("unknown atoms are accepted") {
  CHECK(F("widget").name() == "widget");
}

TEST_CASE("print then parse is the identity on random formulas") {
  std::mt19937 rng(20261016);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = random_formula(rng, 5);
    const std::string text = print_formula(f);
    CAPTURE(text);
    REQUIRE(parse_formula(text) == f);
    CHECK(f.size() >= 1);
  }
}

TEST_CASE("formula keys separate distinct formulas") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Formula a = random_formula(rng, 4), b = random_formula(rng, 4);
    CHECK((a.key() == b.key()) == (a == b));
  }
}

TEST_CASE("structure navigation") {
  const Structure s = B(W("alice", 0, "np"), B(W("saw", 1, kSaw), W("bob", 2, "np")));
  CHECK(s.leaf_count() == 3);
  CHECK(s.at({1, 0}).label()->word == "saw");
  CHECK(s.sites() == std::vector<Site>{{}, {0}, {1}, {1, 0}, {1, 1}});
  const Structure r = s.replace({1, 1}, L("s"));
  CHECK(r.at({1, 1}).formula() == F("s"));
  CHECK(s.at({1, 1}).formula() == F("np"));
  CHECK_THROWS_AS(s.at({0, 0}), std::out_of_range);
  CHECK(C(s, One()).at({1}).is(StructureKind::Unit));
  CHECK(V(s).body() == s);
}

TEST_CASE("canonical keys ignore word labels") {
  const Sequent labelled{B(W("alice", 0, "np"), W("left", 1, "np \\ s0")), F("s0")};
  const Sequent bare{B(L("np"), L("np \\ s0")), F("s0")};
  const Sequent other{B(W("bob", 4, "np"), W("ran", 5, "np \\ s0")), F("s0")};
  CHECK(canonical_sequent(labelled) == canonical_sequent(bare));
  CHECK(canonical_sequent(labelled) == canonical_sequent(other));
  CHECK_FALSE(labelled == bare);
  CHECK(logically_equal(labelled.antecedent, bare.antecedent));
  CHECK(labelled.antecedent.labelled_key() != other.antecedent.labelled_key());
  CHECK(labelled.antecedent.marked_key() == other.antecedent.marked_key());
  CHECK(labelled.antecedent.marked_key() != bare.antecedent.marked_key());
}

TEST_CASE("canonical keys separate different sequents") {
  CHECK(canonical_sequent({L("np"), F("np")}) != canonical_sequent({L("s"), F("s")}));
  const Sequent fig5{B(W("nobody", 0, kNobody), B(W("saw", 1, kSaw), W("anybody", 2, kAnybody))), F("s0")};
  const Sequent fig3{B(W("alice", 0, "np"), B(W("saw", 1, kSaw), B(W("a man", 2, "s0 /c (np \\c s0)"), W("'s mother", 3, "np \\ np")))),
                     F("s0")};
  CHECK(canonical_sequent(fig5) != canonical_sequent(fig3));
  // Modes matter.
  CHECK(canonical_sequent({B(L("a"), L("b")), F("c")}) != canonical_sequent({C(L("a"), L("b")), F("c")}));
  CHECK(canonical_sequent({V(L("a")), F("c")}) != canonical_sequent({P(L("a")), F("c")}));
}

TEST_CASE("structure printing") {
  const Structure s = C(L("np"), B(B(One(), V(W("anybody", 0, kAnybody))), V(W("saw", 1, kSaw))));
  CHECK(print_structure(s) == "np *c (1 * <>anybody * <>saw)");
  CHECK(print_structure(W("a man", 0, "np")) == "'a man'");
  CHECK(print_sequent({L("s0"), F("s+")}) == "s0 |- s+");
}

}
