#include "polarity/serialize.hpp"

#include <stdexcept>

namespace polarity {

namespace {

UnaryMode unary_from(const std::string& s) {
  if (s == "value") return UnaryMode::Value;
  if (s == "u") return UnaryMode::U;
  if (s == "p") return UnaryMode::P;
  throw std::invalid_argument("unknown unary mode '" + s + "'");
}

BinaryMode binary_from(const std::string& s) {
  if (s == "def") return BinaryMode::Default;
  if (s == "c") return BinaryMode::C;
  throw std::invalid_argument("unknown binary mode '" + s + "'");
}

void render(const Derivation& d, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += print_sequent(d.conclusion);
  out += "  [" + display_name(d.rule) + "]\n";
  for (const auto& p : d.premises) render(p, depth + 1, out);
}

}  // namespace

Json formula_to_json(const Formula& f) { return print_formula(f); }

Formula formula_from_json(const Json& j) { return parse_formula(j.get<std::string>()); }

Json structure_to_json(const Structure& s) {
  Json j;
  switch (s.kind()) {
    case StructureKind::Leaf:
      j["leaf"] = formula_to_json(s.formula());
      if (s.label()) {
        j["word"] = s.label()->word;
        j["position"] = s.label()->position;
      }
      break;
    case StructureKind::Unit:
      j["unit"] = true;
      break;
    case StructureKind::Bin:
      j["bin"] = std::string(to_string(s.binary_mode()));
      j["left"] = structure_to_json(s.left());
      j["right"] = structure_to_json(s.right());
      break;
    case StructureKind::Un:
      j["un"] = std::string(to_string(s.unary_mode()));
      j["body"] = structure_to_json(s.body());
      break;
  }
  return j;
}

Structure structure_from_json(const Json& j) {
  if (j.contains("leaf")) {
    std::optional<Label> label;
    if (j.contains("word")) label = Label{j.at("word").get<std::string>(), j.at("position").get<std::size_t>()};
    return Structure::leaf(formula_from_json(j.at("leaf")), std::move(label));
  }
  if (j.contains("unit")) return Structure::unit();
  if (j.contains("bin"))
    return Structure::bin(binary_from(j.at("bin").get<std::string>()), structure_from_json(j.at("left")),
                          structure_from_json(j.at("right")));
  if (j.contains("un"))
    return Structure::un(unary_from(j.at("un").get<std::string>()), structure_from_json(j.at("body")));
  throw std::invalid_argument("not a structure: " + j.dump());
}

Json derivation_to_json(const Derivation& d) {
  Json j;
  j["rule"] = to_string(d.rule);
  j["site"] = d.site;
  j["antecedent"] = structure_to_json(d.conclusion.antecedent);
  j["succedent"] = formula_to_json(d.conclusion.succedent);
  j["premises"] = Json::array();
  for (const auto& p : d.premises) j["premises"].push_back(derivation_to_json(p));
  return j;
}

Derivation derivation_from_json(const Json& j) {
  Derivation d{parse_rule(j.at("rule").get<std::string>()), j.at("site").get<Site>(),
               Sequent{structure_from_json(j.at("antecedent")), formula_from_json(j.at("succedent"))},
               {}};
  for (const auto& p : j.at("premises")) d.premises.push_back(derivation_from_json(p));
  return d;
}

Json reading_to_json(const Reading& r) {
  Json j;
  j["scope"] = Json::array();
  for (const auto& q : r.scope_order) j["scope"].push_back(Json{{"word", q.word}, {"position", q.position}});
  j["linear"] = is_linear(r);
  return j;
}

Json parse_result_to_json(const ParseResult& r) {
  Json j;
  j["tokens"] = r.tokens;
  j["verdict"] = r.verdict == Verdict::Grammatical ? "grammatical" : "ungrammatical";
  j["budget_exhausted"] = r.budget_exhausted;
  j["timed_out"] = r.timed_out;
  j["readings"] = Json::array();
  for (std::size_t i = 0; i < r.readings.size(); ++i) {
    Json rj = reading_to_json(r.readings[i]);
    if (i < r.derivations.size()) rj["derivation"] = derivation_to_json(r.derivations[i]);
    j["readings"].push_back(std::move(rj));
  }
  return j;
}

std::string render_derivation(const Derivation& d) {
  std::string out;
  render(d, 0, out);
  return out;
}

}  // namespace polarity
