#ifndef POLARITY_SEMANTICS_HPP_
#define POLARITY_SEMANTICS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace polarity {

/// Individuals 0..n-1. Predicates over them are bitmasks.
class FiniteModel {
 public:
  static constexpr unsigned kMaxSize = 6;

  /// Throws std::invalid_argument unless 1 <= n <= kMaxSize.
  explicit FiniteModel(unsigned n);

  unsigned domain_size() const { return n_; }
  std::uint32_t subset_count() const { return 1u << n_; }
  std::uint32_t full() const { return subset_count() - 1; }

 private:
  unsigned n_;
};

/// A function of type (e -> t) -> t, tabulated over every subset.
struct QuantDenotation {
  std::vector<bool> table;  // indexed by subset bitmask
  bool operator()(std::uint32_t s) const { return table.at(s); }
};

/// nobody, somebody, anybody, everybody, a man. Throws std::invalid_argument otherwise.
QuantDenotation denotation(std::string_view word, const FiniteModel& m);

QuantDenotation constant_denotation(bool value, const FiniteModel& m);

/// q(s1) implies q(s2) whenever s2 is a subset of s1.
bool is_downward_entailing(const QuantDenotation& q, const FiniteModel& m);

/// q(s1) implies q(s2) whenever s1 is a subset of s2.
bool is_upward_entailing(const QuantDenotation& q, const FiniteModel& m);

}  // namespace polarity

#endif  // POLARITY_SEMANTICS_HPP_
