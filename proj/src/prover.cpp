// Backward proof search.
//
// Goals are decomposed by the invertible rules first: slash and box
// introductions on the right, diamond and product eliminations on the left,
// Unquote in the antecedent, and unfocusing (Root, Left and Right run
// backwards to dissolve a c-mode node over a well-formed context). What is
// left is a choice among the non-invertible steps:
//
//   - a slash elimination at a functor leaf;
//   - focusing: Root at a scope site, Left and Right down to a quantifier
//     leaf, then the c-mode slash elimination. Left siblings on the path are
//     made values first;
//   - evaluation: the value-mode diamond introduction, after gathering the
//     antecedent under one value diamond with T and K' (with Unquote when
//     the goal is a u-mode diamond);
//   - the diamond introductions, box eliminations and product introduction.
//
// T and K' occur only inside these macros. A value mark placed anywhere else
// can be postponed to the macro that needs it, and gathering marks with K'
// never loses a proof that T over a marked structure would find. Focusing
// consumes a quantifier and evaluation removes marks, so search terminates.

#include <algorithm>
#include <set>
#include <unordered_map>

#include "polarity/prover.hpp"
#include "polarity/readings.hpp"

namespace polarity {

namespace {

using Clock = std::chrono::steady_clock;
using S = Structure;

constexpr auto kDef = BinaryMode::Default;
constexpr auto kC = BinaryMode::C;
constexpr auto kValue = UnaryMode::Value;

Site extend(const Site& s, std::uint8_t child) {
  Site out = s;
  out.push_back(child);
  return out;
}

Derivation axiom(const Sequent& s) {
  return Derivation{Rule::of(s.antecedent.label() ? RuleKind::Lex : RuleKind::Axiom), {}, s, {}};
}

struct Step {
  Rule rule;
  Site site;
  S result;
};

// Records structural rewrites applied to an antecedent.
class Steps {
 public:
  explicit Steps(S start) : cur_(std::move(start)) {}

  const S& current() const { return cur_; }
  const std::vector<Step>& list() const { return steps_; }
  int count(RuleKind k) const {
    return static_cast<int>(std::count_if(steps_.begin(), steps_.end(), [&](const Step& s) { return s.rule.kind == k; }));
  }
  int size() const { return static_cast<int>(steps_.size()); }

  void apply(RuleKind k, const Site& site) {
    auto r = apply_structural(k, cur_, site);
    if (!r) throw std::logic_error("structural step does not apply: " + to_string(Rule::of(k)));
    cur_ = *r;
    steps_.push_back(Step{Rule::of(k), site, cur_});
  }

 private:
  S cur_;
  std::vector<Step> steps_;
};

// Derivation of `start |- succ` that performs `steps` and continues with `tail`.
Derivation chain(const S& start, const Formula& succ, const std::vector<Step>& steps, Derivation tail) {
  for (std::size_t k = steps.size(); k-- > 0;) {
    const S& before = k == 0 ? start : steps[k - 1].result;
    tail = Derivation{steps[k].rule, steps[k].site, Sequent{before, succ}, {std::move(tail)}};
  }
  return tail;
}

// Keeps derivations with pairwise distinct scope orders.
class Collector {
 public:
  explicit Collector(std::size_t cap) : cap_(cap) {}

  bool full() const { return items_.size() >= cap_; }

  void add(Derivation d) {
    if (full()) return;
    auto sig = extract_reading(d).scope_order;
    if (seen_.insert(std::move(sig)).second) items_.push_back(std::move(d));
  }

  std::vector<Derivation> take() { return std::move(items_); }

 private:
  std::size_t cap_;
  std::vector<Derivation> items_;
  std::set<std::vector<ScopeItem>> seen_;
};

void collect_labels(const S& s, std::vector<std::optional<Label>>& out) {
  switch (s.kind()) {
    case StructureKind::Leaf: out.push_back(s.label()); break;
    case StructureKind::Unit: out.push_back(std::nullopt); break;
    default:
      for (std::size_t i = 0; i < s.arity(); ++i) collect_labels(s.child(i), out);
  }
}

using LabelMap = std::unordered_map<std::size_t, Label>;

S relabel(const S& s, const LabelMap& m) {
  switch (s.kind()) {
    case StructureKind::Leaf:
      if (s.label()) {
        auto it = m.find(s.label()->position);
        if (it != m.end()) return S::leaf(s.formula(), it->second);
      }
      return s;
    case StructureKind::Unit: return s;
    case StructureKind::Bin: return S::bin(s.binary_mode(), relabel(s.left(), m), relabel(s.right(), m));
    case StructureKind::Un: return S::un(s.unary_mode(), relabel(s.body(), m));
  }
  return s;
}

void relabel(Derivation& d, const LabelMap& m) {
  d.conclusion.antecedent = relabel(d.conclusion.antecedent, m);
  for (auto& p : d.premises) relabel(p, m);
}

// A context left behind by focusing: 1, C * K (hole before C), K * <>B (hole after <>B).
bool is_context(const S& k) {
  if (k.is(StructureKind::Unit)) return true;
  if (!k.is_bin(kDef)) return false;
  if (k.right().is_un(kValue) && is_context(k.left())) return true;
  return is_context(k.right());
}

// One backward Root, Left or Right step dissolving a focused c-mode node.
std::optional<RuleKind> unfocus_rule(const S& n) {
  if (!n.is_bin(kC) || !is_context(n.right())) return std::nullopt;
  const S& k = n.right();
  if (k.is(StructureKind::Unit)) return RuleKind::RootBwd;
  if (is_context(k.right())) return RuleKind::LeftBwd;
  return RuleKind::RightBwd;
}

bool has_marks(const S& s) {
  if (s.is_un(kValue)) return true;
  if (s.is_bin(kDef)) return has_marks(s.left()) || has_marks(s.right());
  return false;
}

// Turns the subterm at `site` into a value: <>X stays, a product containing
// value marks is gathered with K', anything else gets a T.
void make_value(Steps& st, const Site& site) {
  const S n = st.current().at(site);
  if (n.is_un(kValue)) return;
  if (n.is_bin(kDef) && has_marks(n)) {
    make_value(st, extend(site, 0));
    make_value(st, extend(site, 1));
    st.apply(RuleKind::KPrime, site);
    return;
  }
  st.apply(RuleKind::T, site);
}

std::vector<Derivation> wrap(Rule r, const Site& site, const Sequent& conclusion, std::vector<Derivation> subs) {
  std::vector<Derivation> out;
  out.reserve(subs.size());
  for (auto& s : subs) out.push_back(Derivation{r, site, conclusion, {std::move(s)}});
  return out;
}

std::vector<Derivation> wrap_chain(const S& start, const Formula& succ, const std::vector<Step>& steps,
                                   std::vector<Derivation> subs) {
  for (auto& d : subs) d = chain(start, succ, steps, std::move(d));
  return subs;
}

class Search {
 public:
  explicit Search(const SearchBudget& budget) : budget_(budget) {
    if (budget_.time_limit.count() > 0) deadline_ = Clock::now() + budget_.time_limit;
  }

  std::vector<Derivation> solve(const Sequent& goal, int t);

  bool exhausted() const { return exhausted_; }
  bool timed_out() const { return timed_out_; }
  std::size_t nodes() const { return nodes_; }

 private:
  struct MemoEntry {
    Sequent origin;
    std::vector<Derivation> derivations;
    bool exhausted = false;
  };

  std::vector<Derivation> solve_uncached(const Sequent& goal, int t);
  void eliminations(const Sequent& goal, int t, Collector& out);
  void focusing(const Sequent& goal, int t, Collector& out);
  void evaluation(const Sequent& goal, int t, Collector& out);
  void unary(const Sequent& goal, int t, Collector& out);
  bool within(const Steps& st, int t);
  bool out_of_time();

  SearchBudget budget_;
  std::optional<Clock::time_point> deadline_;
  std::unordered_map<std::string, MemoEntry> memo_;
  // Canonical keys of sequents on the current branch, with their frame.
  std::unordered_map<std::string, int> branch_;
  int frame_ = 0;
  int lowest_cut_ = 1 << 30;
  bool exhausted_ = false;
  bool timed_out_ = false;
  std::size_t nodes_ = 0;
};

bool Search::out_of_time() {
  if (timed_out_) return true;
  if (deadline_ && (nodes_ & 255) == 0 && Clock::now() > *deadline_) {
    timed_out_ = true;
    exhausted_ = true;
  }
  return timed_out_;
}

// Checks a macro's structural steps against the budget.
bool Search::within(const Steps& st, int t) {
  if (st.size() > budget_.max_structural_steps || st.count(RuleKind::T) > t) {
    exhausted_ = true;
    return false;
  }
  return true;
}

std::vector<Derivation> Search::solve(const Sequent& goal, int t) {
  if (timed_out_) return {};
  const S& a = goal.antecedent;
  if (a.is(StructureKind::Leaf) && a.formula() == goal.succedent) return {axiom(goal)};

  const std::string branch_key = canonical_sequent(goal);
  if (auto it = branch_.find(branch_key); it != branch_.end()) {
    lowest_cut_ = std::min(lowest_cut_, it->second);
    return {};
  }

  std::string key;
  if (budget_.memo_enabled) {
    key = a.marked_key() + "|-" + goal.succedent.key() + "#" + std::to_string(t);
    if (auto it = memo_.find(key); it != memo_.end()) {
      exhausted_ = exhausted_ || it->second.exhausted;
      std::vector<Derivation> out = it->second.derivations;
      std::vector<std::optional<Label>> from, to;
      collect_labels(it->second.origin.antecedent, from);
      collect_labels(a, to);
      LabelMap m;
      for (std::size_t i = 0; i < from.size(); ++i)
        if (from[i] && to[i] && !(*from[i] == *to[i])) m.emplace(from[i]->position, *to[i]);
      if (!m.empty())
        for (auto& d : out) relabel(d, m);
      return out;
    }
  }

  const bool saved_exhausted = exhausted_;
  const int saved_cut = lowest_cut_;
  exhausted_ = false;
  lowest_cut_ = 1 << 30;
  ++frame_;
  ++nodes_;
  branch_.emplace(branch_key, frame_);

  std::vector<Derivation> result = out_of_time() ? std::vector<Derivation>{} : solve_uncached(goal, t);

  branch_.erase(branch_key);
  const bool independent = lowest_cut_ >= frame_;
  --frame_;
  if (budget_.memo_enabled && independent && !timed_out_) memo_.emplace(key, MemoEntry{goal, result, exhausted_});
  exhausted_ = exhausted_ || saved_exhausted;
  lowest_cut_ = independent ? saved_cut : std::min(saved_cut, lowest_cut_);
  return result;
}

std::vector<Derivation> Search::solve_uncached(const Sequent& goal, int t) {
  const S& a = goal.antecedent;
  const Formula& c = goal.succedent;

  switch (c.kind()) {
    case FormulaKind::Over: {
      Sequent p{S::bin(c.binary_mode(), a, S::leaf(c.argument())), c.result()};
      return wrap(Rule::of(RuleKind::OverR, c.binary_mode()), {}, goal, solve(p, t));
    }
    case FormulaKind::Under: {
      Sequent p{S::bin(c.binary_mode(), S::leaf(c.argument()), a), c.result()};
      return wrap(Rule::of(RuleKind::UnderR, c.binary_mode()), {}, goal, solve(p, t));
    }
    case FormulaKind::BoxDown: {
      Sequent p{S::un(c.unary_mode(), a), c.body()};
      return wrap(Rule::of(RuleKind::BoxDownR, c.unary_mode()), {}, goal, solve(p, t));
    }
    default:
      break;
  }

  for (const auto& site : a.sites()) {
    const S n = a.at(site);
    if (n.is(StructureKind::Leaf)) {
      const Formula& f = n.formula();
      if (f.is(FormulaKind::Dia)) {
        Sequent p{a.replace(site, S::un(f.unary_mode(), S::leaf(f.body(), n.label()))), c};
        return wrap(Rule::of(RuleKind::DiaL, f.unary_mode()), site, goal, solve(p, t));
      }
      if (f.is(FormulaKind::Product)) {
        Sequent p{a.replace(site, S::bin(f.binary_mode(), S::leaf(f.left()), S::leaf(f.right()))), c};
        return wrap(Rule::of(RuleKind::ProdL, f.binary_mode()), site, goal, solve(p, t));
      }
    }
    // Unquote in the antecedent is invertible: T undoes it.
    std::optional<RuleKind> k;
    if (apply_structural(RuleKind::UnquoteAnte, a, site))
      k = RuleKind::UnquoteAnte;
    else
      k = unfocus_rule(n);
    if (k) {
      Steps st(a);
      st.apply(*k, site);
      return wrap_chain(a, c, st.list(), solve(Sequent{st.current(), c}, t));
    }
  }

  Collector out(static_cast<std::size_t>(std::max(1, budget_.max_derivations)));
  eliminations(goal, t, out);
  if (!out.full()) focusing(goal, t, out);
  if (!out.full()) unary(goal, t, out);
  if (!out.full()) evaluation(goal, t, out);

  if (!out.full() && c.is(FormulaKind::Product) && a.is_bin(c.binary_mode())) {
    auto lefts = solve(Sequent{a.left(), c.left()}, t);
    if (!lefts.empty()) {
      auto rights = solve(Sequent{a.right(), c.right()}, t);
      for (const auto& l : lefts)
        for (const auto& r : rights)
          out.add(Derivation{Rule::of(RuleKind::ProdR, c.binary_mode()), {}, goal, {l, r}});
    }
  }
  return out.take();
}

// Slash elimination at any node whose functor child is a leaf of matching mode.
void Search::eliminations(const Sequent& goal, int t, Collector& out) {
  const S& a = goal.antecedent;
  for (const auto& site : a.sites()) {
    const S n = a.at(site);
    if (!n.is(StructureKind::Bin)) continue;
    for (RuleKind kind : {RuleKind::OverL, RuleKind::UnderL}) {
      if (out.full() || timed_out_) return;
      const bool over = kind == RuleKind::OverL;
      const S functor = over ? n.left() : n.right();
      if (!functor.is(StructureKind::Leaf)) continue;
      const Formula& f = functor.formula();
      if (!f.is(over ? FormulaKind::Over : FormulaKind::Under) || f.binary_mode() != n.binary_mode()) continue;
      auto sides = solve(Sequent{over ? n.right() : n.left(), f.argument()}, t);
      if (sides.empty()) continue;
      auto mains = solve(Sequent{a.replace(site, S::leaf(f.result())), goal.succedent}, t);
      for (const auto& m : mains)
        for (const auto& s : sides) out.add(Derivation{Rule::of(kind, n.binary_mode()), site, goal, {m, s}});
    }
  }
}

// Root at a scope site, then Left and Right down default-mode products to a
// c-mode functor leaf, which is then eliminated.
void Search::focusing(const Sequent& goal, int t, Collector& out) {
  const S& a = goal.antecedent;
  const Formula& c = goal.succedent;
  for (const auto& scope : a.sites()) {
    const S top = a.at(scope);
    if (!top.is_bin(kDef) && !top.is(StructureKind::Leaf)) continue;
    for (const auto& rel : top.sites()) {
      if (out.full() || timed_out_) return;
      const S q = top.at(rel);
      if (!q.is(StructureKind::Leaf) || !q.formula().is(FormulaKind::Over) || q.formula().binary_mode() != kC)
        continue;
      bool reachable = true;
      for (std::size_t i = 0; i < rel.size() && reachable; ++i)
        reachable = top.at(Site(rel.begin(), rel.begin() + static_cast<long>(i))).is_bin(kDef);
      if (!reachable) continue;

      Steps st(a);
      Site here = scope;
      for (std::uint8_t dir : rel) {
        if (dir == 1) make_value(st, extend(here, 0));
        here.push_back(dir);
      }
      st.apply(RuleKind::RootFwd, scope);
      for (std::uint8_t dir : rel) st.apply(dir == 0 ? RuleKind::LeftFwd : RuleKind::RightFwd, scope);
      if (!within(st, t)) continue;

      const int left = t - st.count(RuleKind::T);
      const S focused = st.current().at(scope);
      const Formula& f = q.formula();
      auto sides = solve(Sequent{focused.right(), f.argument()}, left);
      if (sides.empty()) continue;
      const Sequent before{st.current(), c};
      auto mains = solve(Sequent{st.current().replace(scope, S::leaf(f.result())), c}, left);
      for (const auto& m : mains)
        for (const auto& s : sides)
          out.add(chain(a, c, st.list(), Derivation{Rule::of(RuleKind::OverL, kC), scope, before, {m, s}}));
    }
  }
}

// Gathers the antecedent under one value diamond and introduces the diamond
// on the right, preceded by Unquote when the goal is a u-mode diamond.
void Search::evaluation(const Sequent& goal, int t, Collector& out) {
  const S& a = goal.antecedent;
  const Formula& c = goal.succedent;
  const bool unquote = c.is(FormulaKind::Dia) && c.unary_mode() == UnaryMode::U;
  const bool dia = c.is(FormulaKind::Dia) && c.unary_mode() == kValue;
  if (!unquote && !dia) return;
  // Unquote over an unmarked antecedent only leads back to the same goal.
  if (unquote && !has_marks(a)) return;

  const Formula lifted = unquote ? Formula::dia(kValue, c) : c;
  Steps st(a);
  make_value(st, {});
  if (!within(st, t)) return;
  const int left = t - st.count(RuleKind::T);
  const S& gathered = st.current();
  for (auto& d : solve(Sequent{gathered.body(), lifted.body()}, left)) {
    Derivation intro{Rule::of(RuleKind::DiaR, kValue), {}, Sequent{gathered, lifted}, {std::move(d)}};
    Derivation tail = chain(a, lifted, st.list(), std::move(intro));
    if (unquote) tail = Derivation{Rule::of(RuleKind::UnquoteSucc), {}, goal, {std::move(tail)}};
    out.add(std::move(tail));
  }
}

// Diamond introduction for the non-value modes and box elimination.
void Search::unary(const Sequent& goal, int t, Collector& out) {
  const S& a = goal.antecedent;
  const Formula& c = goal.succedent;
  if (c.is(FormulaKind::Dia) && c.unary_mode() != kValue && a.is_un(c.unary_mode())) {
    for (auto& d : solve(Sequent{a.body(), c.body()}, t))
      out.add(Derivation{Rule::of(RuleKind::DiaR, c.unary_mode()), {}, goal, {std::move(d)}});
  }
  for (const auto& site : a.sites()) {
    if (out.full() || timed_out_) return;
    const S n = a.at(site);
    if (n.is(StructureKind::Un) && n.body().is(StructureKind::Leaf)) {
      const Formula& f = n.body().formula();
      if (!f.is(FormulaKind::BoxDown) || f.unary_mode() != n.unary_mode()) continue;
      for (auto& d : solve(Sequent{a.replace(site, S::leaf(f.body(), n.body().label())), c}, t))
        out.add(Derivation{Rule::of(RuleKind::BoxDownL, n.unary_mode()), site, goal, {std::move(d)}});
    } else if (n.is(StructureKind::Leaf) && n.formula().is(FormulaKind::BoxDown) &&
               n.formula().unary_mode() == kValue && t > 0) {
      Steps st(a);
      st.apply(RuleKind::T, site);
      const Sequent lifted{st.current(), c};
      for (auto& d : solve(Sequent{a.replace(site, S::leaf(n.formula().body(), n.label())), c}, t - 1))
        out.add(chain(a, c, st.list(), Derivation{Rule::of(RuleKind::BoxDownL, kValue), site, lifted, {std::move(d)}}));
    }
  }
}

}  // namespace

ProveResult prove(const Sequent& goal, const SearchBudget& budget) {
  Search search(budget);
  ProveResult r;
  r.derivations = search.solve(goal, budget.t_insertions_for(goal));
  r.budget_exhausted = search.exhausted();
  r.timed_out = search.timed_out();
  r.closure_states = search.nodes();
  return r;
}

}  // namespace polarity
