#include <doctest.h>

#include "polarity/lexicon.hpp"
#include "polarity/parser.hpp"
#include "polarity/serialize.hpp"
#include "support.hpp"

using namespace polarity;
using namespace polarity::test;

TEST_SUITE("serialize") {

TEST_CASE("structures round trip") {
  const Structure s = C(B(V(W("a man", 3, "s0 /c (np \\c s0)")), P(L("np"))), Structure::un(UnaryMode::U, One()));
  const Json j = structure_to_json(s);
  CHECK(structure_from_json(j) == s);
  CHECK(j["bin"] == "c");
  CHECK(j["left"]["left"]["un"] == "value");
  CHECK(j["left"]["left"]["body"]["word"] == "a man");
  CHECK(j["left"]["left"]["body"]["position"] == 3);
  CHECK(j["right"]["body"]["unit"] == true);
  CHECK_FALSE(j["left"]["right"]["body"].contains("word"));
}

TEST_CASE("bad json is rejected") {
  CHECK_THROWS(structure_from_json(Json{{"bin", "x"}, {"left", {{"unit", true}}}, {"right", {{"unit", true}}}}));
  CHECK_THROWS(structure_from_json(Json{{"un", "q"}, {"body", {{"unit", true}}}}));
  CHECK_THROWS(structure_from_json(Json::object()));
  CHECK_THROWS_AS(formula_from_json(Json("np /")), SyntaxError);
}

TEST_CASE("derivations round trip") {
  const auto r = parse_sentence("Somebody saw everybody", default_lexicon());
  REQUIRE(r.derivations.size() == 2);
  for (const auto& d : r.derivations) {
    const Json j = derivation_to_json(d);
    const Derivation back = derivation_from_json(Json::parse(j.dump()));
    CHECK(back == d);
    CHECK(validate_derivation(back));
    CHECK(render_derivation(back) == render_derivation(d));
  }
}

TEST_CASE("rendering indents premises") {
  const Derivation d = D(Rule::of(RuleKind::UnderL), {}, B(L("np"), L("np \\ s0")), "s0",
                         {Ax(L("s0"), "s0"), Ax(L("np"), "np")});
  CHECK(render_derivation(d) == "np * (np \\ s0) |- s0  [\\E]\n  s0 |- s0  [Axiom]\n  np |- np  [Axiom]\n");
}

TEST_CASE("parse results") {
  const auto r = parse_sentence("Nobody saw anybody", default_lexicon());
  const Json j = parse_result_to_json(r);
  CHECK(j["verdict"] == "grammatical");
  CHECK(j["tokens"].size() == 3);
  REQUIRE(j["readings"].size() == 1);
  CHECK(j["readings"][0]["linear"] == true);
  CHECK(j["readings"][0]["scope"][0]["word"] == "nobody");
  CHECK(derivation_from_json(j["readings"][0]["derivation"]) == r.derivations[0]);
  CHECK(parse_result_to_json(r).dump() == j.dump());
}

}
