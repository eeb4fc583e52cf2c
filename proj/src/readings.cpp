#include "polarity/readings.hpp"

namespace polarity {

namespace {

void collect(const Derivation& d, std::vector<ScopeItem>& out) {
  const bool scope_step = (d.rule.kind == RuleKind::OverL || d.rule.kind == RuleKind::UnderL) &&
                          d.rule.binary == BinaryMode::C && d.premises.size() == 2;
  if (!scope_step) {
    for (const auto& p : d.premises) collect(p, out);
    return;
  }
  const Structure node = d.conclusion.antecedent.at(d.site);
  const Structure functor = d.rule.kind == RuleKind::OverL ? node.left() : node.right();
  collect(d.premises[0], out);
  if (functor.label()) out.push_back(ScopeItem{functor.label()->word, functor.label()->position});
  collect(d.premises[1], out);
}

}  // namespace

Reading extract_reading(const Derivation& d) {
  Reading r;
  collect(d, r.scope_order);
  return r;
}

bool is_linear(const Reading& r) { return inverted_pairs(r).empty(); }

std::vector<std::pair<std::size_t, std::size_t>> inverted_pairs(const Reading& r) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& s = r.scope_order;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i].position > s[j].position) out.emplace_back(i, j);
  return out;
}

std::string format_reading(const Reading& r) {
  if (r.scope_order.empty()) return "-";
  std::string out;
  for (const auto& item : r.scope_order) {
    if (!out.empty()) out += " > ";
    out += item.word;
  }
  return out;
}

}  // namespace polarity
