#include "polarity/semantics.hpp"

#include <string>

#include "polarity/lexicon.hpp"

namespace polarity {

FiniteModel::FiniteModel(unsigned n) : n_(n) {
  if (n < 1 || n > kMaxSize)
    throw std::invalid_argument("domain size must be between 1 and " + std::to_string(kMaxSize));
}

QuantDenotation denotation(std::string_view word, const FiniteModel& m) {
  const std::string w = to_lower(word);
  QuantDenotation q;
  q.table.resize(m.subset_count());
  for (std::uint32_t s = 0; s < m.subset_count(); ++s) {
    if (w == "nobody")
      q.table[s] = s == 0;
    else if (w == "somebody" || w == "anybody" || w == "a man")
      q.table[s] = s != 0;
    else if (w == "everybody")
      q.table[s] = s == m.full();
    else
      throw std::invalid_argument("no denotation for '" + std::string(word) + "'");
  }
  return q;
}

QuantDenotation constant_denotation(bool value, const FiniteModel& m) {
  return QuantDenotation{std::vector<bool>(m.subset_count(), value)};
}

bool is_downward_entailing(const QuantDenotation& q, const FiniteModel& m) {
  for (std::uint32_t s1 = 0; s1 < m.subset_count(); ++s1)
    for (std::uint32_t s2 = 0; s2 < m.subset_count(); ++s2)
      if ((s2 & ~s1) == 0 && q(s1) && !q(s2)) return false;
  return true;
}

bool is_upward_entailing(const QuantDenotation& q, const FiniteModel& m) {
  for (std::uint32_t s1 = 0; s1 < m.subset_count(); ++s1)
    for (std::uint32_t s2 = 0; s2 < m.subset_count(); ++s2)
      if ((s1 & ~s2) == 0 && q(s1) && !q(s2)) return false;
  return true;
}

}  // namespace polarity
