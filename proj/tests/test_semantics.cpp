#include <doctest.h>

#include "polarity/semantics.hpp"

using namespace polarity;

namespace {

// Independent oracle: enumerate predicates as explicit membership vectors.
bool oracle(const char* word, const std::vector<bool>& member) {
  std::size_t count = 0;
  for (bool b : member) count += b;
  const std::string w = word;
  if (w == "nobody") return count == 0;
  if (w == "everybody") return count == member.size();
  return count > 0;
}

}  // namespace

TEST_SUITE("semantics") {

TEST_CASE("model size is bounded") {
  CHECK_THROWS_AS(FiniteModel(0), std::invalid_argument);
  CHECK_THROWS_AS(FiniteModel(7), std::invalid_argument);
  const FiniteModel m(3);
  CHECK(m.subset_count() == 8);
  CHECK(m.full() == 7);
}

TEST_CASE("denotations agree with the membership oracle") {
  for (unsigned n = 1; n <= FiniteModel::kMaxSize; ++n) {
    const FiniteModel m(n);
    for (const char* w : {"nobody", "somebody", "anybody", "everybody", "a man"}) {
      const auto q = denotation(w, m);
      REQUIRE(q.table.size() == m.subset_count());
      for (std::uint32_t s = 0; s < m.subset_count(); ++s) {
        std::vector<bool> member(n);
        for (unsigned i = 0; i < n; ++i) member[i] = (s >> i) & 1u;
        CHECK(q(s) == oracle(w, member));
      }
    }
  }
  CHECK_THROWS_AS(denotation("alice", FiniteModel(2)), std::invalid_argument);
}

TEST_CASE("monotonicity") {
  for (unsigned n = 1; n <= FiniteModel::kMaxSize; ++n) {
    CAPTURE(n);
    const FiniteModel m(n);
    CHECK(is_downward_entailing(denotation("nobody", m), m));
    CHECK_FALSE(is_upward_entailing(denotation("nobody", m), m));
    CHECK(is_upward_entailing(denotation("somebody", m), m));
    CHECK(is_upward_entailing(denotation("everybody", m), m));
    CHECK_FALSE(is_downward_entailing(denotation("somebody", m), m));
    // With one individual, everybody and somebody coincide; neither is
    // downward entailing since the empty set is never in their extension.
    CHECK_FALSE(is_downward_entailing(denotation("everybody", m), m));
  }
}

TEST_CASE("constant functions are both") {
  const FiniteModel m(4);
  for (bool v : {false, true}) {
    CHECK(is_downward_entailing(constant_denotation(v, m), m));
    CHECK(is_upward_entailing(constant_denotation(v, m), m));
  }
}

}
