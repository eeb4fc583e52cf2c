// Builders for hand-written structures and derivations.

#ifndef POLARITY_TESTS_SUPPORT_HPP_
#define POLARITY_TESTS_SUPPORT_HPP_

#include <string>
#include <vector>

#include "polarity/prover.hpp"

namespace polarity::test {

inline Formula F(const std::string& text) { return parse_formula(text); }

inline Structure L(const std::string& formula) { return Structure::leaf(F(formula)); }
inline Structure W(const std::string& word, std::size_t pos, const std::string& formula) {
  return Structure::leaf(F(formula), Label{word, pos});
}
inline Structure B(Structure l, Structure r) { return Structure::bin(BinaryMode::Default, std::move(l), std::move(r)); }
inline Structure C(Structure l, Structure r) { return Structure::bin(BinaryMode::C, std::move(l), std::move(r)); }
inline Structure V(Structure s) { return Structure::un(UnaryMode::Value, std::move(s)); }
inline Structure P(Structure s) { return Structure::un(UnaryMode::P, std::move(s)); }
inline Structure One() { return Structure::unit(); }

inline Derivation D(Rule r, Site site, Structure ante, const std::string& succ, std::vector<Derivation> premises = {}) {
  return Derivation{r, std::move(site), Sequent{std::move(ante), F(succ)}, std::move(premises)};
}

inline Derivation Ax(Structure ante, const std::string& succ) {
  const RuleKind k = ante.label() ? RuleKind::Lex : RuleKind::Axiom;
  return D(Rule::of(k), {}, std::move(ante), succ);
}

inline const char* const kSaw = "(np \\ s0) / np";
inline const char* const kNobody = "s0 /c (np \\c s-)";
inline const char* const kAnybody = "s- /c (np \\c s-)";
inline const char* const kSomebody = "s+ /c (np \\c s+)";
inline const char* const kEverybody = "s0 /c (np \\c s+)";

}  // namespace polarity::test

#endif  // POLARITY_TESTS_SUPPORT_HPP_
