#include "polarity/core.hpp"

#include <functional>

namespace polarity {

std::string_view to_string(UnaryMode m) {
  switch (m) {
    case UnaryMode::Value: return "value";
    case UnaryMode::U: return "u";
    case UnaryMode::P: return "p";
  }
  return "?";
}

std::string_view to_string(BinaryMode m) { return m == BinaryMode::C ? "c" : "def"; }

namespace {

char mode_char(UnaryMode m) {
  switch (m) {
    case UnaryMode::Value: return 'v';
    case UnaryMode::U: return 'u';
    case UnaryMode::P: return 'p';
  }
  return '?';
}

char mode_char(BinaryMode m) { return m == BinaryMode::C ? 'c' : 'd'; }

}  // namespace

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
  FormulaKind kind = FormulaKind::Unit;
  BinaryMode bmode = BinaryMode::Default;
  UnaryMode umode = UnaryMode::Value;
  std::string name;
  std::shared_ptr<const Node> a, b;
  std::string key;
  std::size_t hash = 0;
  std::size_t size = 1;
};

namespace {

std::shared_ptr<Formula::Node> finish(std::shared_ptr<Formula::Node> n) {
  std::string& k = n->key;
  switch (n->kind) {
    case FormulaKind::Atom:
      k = "a" + n->name + ";";
      break;
    case FormulaKind::Unit:
      k = "1";
      break;
    case FormulaKind::Product:
    case FormulaKind::Over:
    case FormulaKind::Under: {
      char op = n->kind == FormulaKind::Product ? '*' : n->kind == FormulaKind::Over ? '/' : '\\';
      k.reserve(2 + n->a->key.size() + n->b->key.size());
      k += op;
      k += mode_char(n->bmode);
      k += n->a->key;
      k += n->b->key;
      n->size = 1 + n->a->size + n->b->size;
      break;
    }
    case FormulaKind::Dia:
    case FormulaKind::BoxDown:
      k += n->kind == FormulaKind::Dia ? '<' : '[';
      k += mode_char(n->umode);
      k += n->a->key;
      n->size = 1 + n->a->size;
      break;
  }
  n->hash = std::hash<std::string>{}(k);
  return n;
}

}  // namespace

Formula Formula::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty atom name");
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Atom;
  n->name = std::move(name);
  return Formula(finish(std::move(n)));
}

Formula Formula::unit() {
  static const Formula u = [] {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Unit;
    return Formula(finish(std::move(n)));
  }();
  return u;
}

namespace {

std::shared_ptr<Formula::Node> binary_node(FormulaKind k, BinaryMode m) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = k;
  n->bmode = m;
  return n;
}

}  // namespace

Formula Formula::product(BinaryMode m, Formula left, Formula right) {
  auto n = binary_node(FormulaKind::Product, m);
  n->a = std::move(left.node_);
  n->b = std::move(right.node_);
  return Formula(finish(std::move(n)));
}

Formula Formula::over(BinaryMode m, Formula result, Formula argument) {
  auto n = binary_node(FormulaKind::Over, m);
  n->a = std::move(result.node_);
  n->b = std::move(argument.node_);
  return Formula(finish(std::move(n)));
}

Formula Formula::under(BinaryMode m, Formula argument, Formula result) {
  auto n = binary_node(FormulaKind::Under, m);
  n->a = std::move(argument.node_);
  n->b = std::move(result.node_);
  return Formula(finish(std::move(n)));
}

Formula Formula::dia(UnaryMode m, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Dia;
  n->umode = m;
  n->a = std::move(body.node_);
  return Formula(finish(std::move(n)));
}

Formula Formula::box_down(UnaryMode m, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::BoxDown;
  n->umode = m;
  n->a = std::move(body.node_);
  return Formula(finish(std::move(n)));
}

Formula Formula::neutral_clause() {
  static const Formula f = dia(UnaryMode::U, atom("s"));
  return f;
}

Formula Formula::positive_clause() {
  static const Formula f =
      dia(UnaryMode::U, box_down(UnaryMode::P, dia(UnaryMode::P, atom("s"))));
  return f;
}

Formula Formula::negative_clause() {
  static const Formula f = box_down(UnaryMode::P, dia(UnaryMode::P, neutral_clause()));
  return f;
}

FormulaKind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
BinaryMode Formula::binary_mode() const { return node_->bmode; }
UnaryMode Formula::unary_mode() const { return node_->umode; }

Formula Formula::left() const {
  if (!node_->b) throw std::logic_error("formula has no left operand");
  return Formula(node_->a);
}

Formula Formula::right() const {
  if (!node_->b) throw std::logic_error("formula has no right operand");
  return Formula(node_->b);
}

Formula Formula::body() const {
  if (!node_->a || node_->b) throw std::logic_error("formula has no body");
  return Formula(node_->a);
}

Formula Formula::result() const { return kind() == FormulaKind::Over ? left() : right(); }
Formula Formula::argument() const { return kind() == FormulaKind::Over ? right() : left(); }

bool Formula::is_slash(BinaryMode m) const {
  return (kind() == FormulaKind::Over || kind() == FormulaKind::Under) && binary_mode() == m;
}

const std::string& Formula::key() const { return node_->key; }
std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::size() const { return node_->size; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->hash == b.node_->hash && a.node_->key == b.node_->key;
}

// ---------------------------------------------------------------------------
// Structure

struct Structure::Node {
  StructureKind kind = StructureKind::Unit;
  BinaryMode bmode = BinaryMode::Default;
  UnaryMode umode = UnaryMode::Value;
  std::optional<Formula> formula;
  std::optional<Label> label;
  std::shared_ptr<const Node> a, b;
  std::size_t leaves = 1;
};

Structure Structure::leaf(Formula f, std::optional<Label> label) {
  auto n = std::make_shared<Node>();
  n->kind = StructureKind::Leaf;
  n->formula = std::move(f);
  n->label = std::move(label);
  return Structure(std::move(n));
}

Structure Structure::unit() {
  static const Structure u = [] {
    auto n = std::make_shared<Node>();
    n->kind = StructureKind::Unit;
    return Structure(std::move(n));
  }();
  return u;
}

Structure Structure::bin(BinaryMode m, Structure left, Structure right) {
  auto n = std::make_shared<Node>();
  n->kind = StructureKind::Bin;
  n->bmode = m;
  n->leaves = left.node_->leaves + right.node_->leaves;
  n->a = std::move(left.node_);
  n->b = std::move(right.node_);
  return Structure(std::move(n));
}

Structure Structure::un(UnaryMode m, Structure body) {
  auto n = std::make_shared<Node>();
  n->kind = StructureKind::Un;
  n->umode = m;
  n->leaves = body.node_->leaves;
  n->a = std::move(body.node_);
  return Structure(std::move(n));
}

StructureKind Structure::kind() const { return node_->kind; }

const Formula& Structure::formula() const {
  if (!node_->formula) throw std::logic_error("structure is not a formula leaf");
  return *node_->formula;
}

const std::optional<Label>& Structure::label() const { return node_->label; }
BinaryMode Structure::binary_mode() const { return node_->bmode; }
UnaryMode Structure::unary_mode() const { return node_->umode; }

Structure Structure::left() const {
  if (node_->kind != StructureKind::Bin) throw std::logic_error("structure is not binary");
  return Structure(node_->a);
}

Structure Structure::right() const {
  if (node_->kind != StructureKind::Bin) throw std::logic_error("structure is not binary");
  return Structure(node_->b);
}

Structure Structure::body() const {
  if (node_->kind != StructureKind::Un) throw std::logic_error("structure is not unary");
  return Structure(node_->a);
}

std::size_t Structure::arity() const {
  switch (node_->kind) {
    case StructureKind::Bin: return 2;
    case StructureKind::Un: return 1;
    default: return 0;
  }
}

Structure Structure::child(std::size_t i) const {
  if (i >= arity()) throw std::out_of_range("structure child index");
  return Structure(i == 0 ? node_->a : node_->b);
}

std::size_t Structure::leaf_count() const { return node_->leaves; }

Structure Structure::at(const Site& site) const {
  Structure cur = *this;
  for (auto i : site) cur = cur.child(i);
  return cur;
}

Structure Structure::replace(const Site& site, const Structure& with) const {
  std::function<Structure(const Structure&, std::size_t)> go = [&](const Structure& s,
                                                                    std::size_t depth) {
    if (depth == site.size()) return with;
    std::uint8_t i = site[depth];
    if (i >= s.arity()) throw std::out_of_range("structure site");
    if (s.is(StructureKind::Un)) return un(s.unary_mode(), go(s.body(), depth + 1));
    if (i == 0) return bin(s.binary_mode(), go(s.left(), depth + 1), s.right());
    return bin(s.binary_mode(), s.left(), go(s.right(), depth + 1));
  };
  return go(*this, 0);
}

std::vector<Site> Structure::sites() const {
  std::vector<Site> out;
  Site cur;
  std::function<void(const Structure&)> walk = [&](const Structure& s) {
    out.push_back(cur);
    for (std::size_t i = 0; i < s.arity(); ++i) {
      cur.push_back(static_cast<std::uint8_t>(i));
      walk(s.child(i));
      cur.pop_back();
    }
  };
  walk(*this);
  return out;
}

void Structure::append_key(std::string& out, int label_mode) const {
  switch (node_->kind) {
    case StructureKind::Leaf:
      out += 'L';
      out += node_->formula->key();
      if (node_->label && label_mode == 1) out += 'w';
      if (node_->label && label_mode == 2) {
        out += '@';
        out += node_->label->word;
        out += '#';
        out += std::to_string(node_->label->position);
        out += ';';
      }
      break;
    case StructureKind::Unit:
      out += 'U';
      break;
    case StructureKind::Bin:
      out += 'B';
      out += mode_char(node_->bmode);
      left().append_key(out, label_mode);
      right().append_key(out, label_mode);
      break;
    case StructureKind::Un:
      out += 'D';
      out += mode_char(node_->umode);
      body().append_key(out, label_mode);
      break;
  }
}

std::string Structure::key() const {
  std::string out;
  append_key(out, 0);
  return out;
}

std::string Structure::marked_key() const {
  std::string out;
  append_key(out, 1);
  return out;
}

std::string Structure::labelled_key() const {
  std::string out;
  append_key(out, 2);
  return out;
}

namespace {

bool equal_impl(const Structure& a, const Structure& b, bool labels) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case StructureKind::Leaf:
      return a.formula() == b.formula() && (!labels || a.label() == b.label());
    case StructureKind::Unit:
      return true;
    case StructureKind::Bin:
      return a.binary_mode() == b.binary_mode() && equal_impl(a.left(), b.left(), labels) &&
             equal_impl(a.right(), b.right(), labels);
    case StructureKind::Un:
      return a.unary_mode() == b.unary_mode() && equal_impl(a.body(), b.body(), labels);
  }
  return false;
}

}  // namespace

bool operator==(const Structure& a, const Structure& b) {
  return a.node_ == b.node_ || equal_impl(a, b, true);
}

bool logically_equal(const Structure& a, const Structure& b) { return equal_impl(a, b, false); }

std::string canonical_sequent(const Sequent& s) {
  std::string out = s.antecedent.key();
  out += "|-";
  out += s.succedent.key();
  return out;
}

}  // namespace polarity
