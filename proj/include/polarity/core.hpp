// Formulas, antecedent structures and sequents of the multimodal logic.
//
// All values here are immutable handles onto shared nodes; copying is cheap
// and instances may be shared freely between threads.

#ifndef POLARITY_CORE_HPP_
#define POLARITY_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polarity {

enum class UnaryMode : std::uint8_t { Value, U, P };
enum class BinaryMode : std::uint8_t { Default, C };

std::string_view to_string(UnaryMode m);
std::string_view to_string(BinaryMode m);

enum class FormulaKind : std::uint8_t { Atom, Unit, Product, Over, Under, Dia, BoxDown };

/// A logical type. Over(mode, result, argument) is `result / argument`,
/// Under(mode, argument, result) is `argument \ result`.
class Formula {
 public:
  struct Node;

  static Formula atom(std::string name);
  static Formula unit();
  static Formula product(BinaryMode m, Formula left, Formula right);
  static Formula over(BinaryMode m, Formula result, Formula argument);
  static Formula under(BinaryMode m, Formula argument, Formula result);
  static Formula dia(UnaryMode m, Formula body);
  static Formula box_down(UnaryMode m, Formula body);

  // Clause types: s0 = <u>s, s+ = <u>[p]<p>s, s- = [p]<p><u>s.
  static Formula neutral_clause();
  static Formula positive_clause();
  static Formula negative_clause();

  FormulaKind kind() const;
  const std::string& name() const;
  BinaryMode binary_mode() const;
  UnaryMode unary_mode() const;

  // Product: left/right. Over: left = result, right = argument.
  // Under: left = argument, right = result.
  Formula left() const;
  Formula right() const;
  Formula body() const;

  Formula result() const;
  Formula argument() const;

  bool is(FormulaKind k) const { return kind() == k; }
  bool is_slash(BinaryMode m) const;

  /// Prefix-coded serialization; equal keys iff equal formulas.
  const std::string& key() const;
  std::size_t hash() const;
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Display label carried by lexical leaves. Positions are surface token indices.
struct Label {
  std::string word;
  std::size_t position = 0;
  friend bool operator==(const Label&, const Label&) = default;
};

enum class StructureKind : std::uint8_t { Leaf, Unit, Bin, Un };

/// Child index path from the root: 0 = left child or body, 1 = right child.
using Site = std::vector<std::uint8_t>;

class Structure {
 public:
  struct Node;

  static Structure leaf(Formula f, std::optional<Label> label = std::nullopt);
  static Structure unit();
  static Structure bin(BinaryMode m, Structure left, Structure right);
  static Structure un(UnaryMode m, Structure body);

  StructureKind kind() const;
  bool is(StructureKind k) const { return kind() == k; }
  bool is_bin(BinaryMode m) const { return is(StructureKind::Bin) && binary_mode() == m; }
  bool is_un(UnaryMode m) const { return is(StructureKind::Un) && unary_mode() == m; }

  const Formula& formula() const;
  const std::optional<Label>& label() const;
  BinaryMode binary_mode() const;
  UnaryMode unary_mode() const;
  Structure left() const;
  Structure right() const;
  Structure body() const;
  std::size_t arity() const;
  Structure child(std::size_t i) const;

  std::size_t leaf_count() const;

  /// Subterm at `site`; throws std::out_of_range on an invalid path.
  Structure at(const Site& site) const;
  /// Copy with the subterm at `site` replaced.
  Structure replace(const Site& site, const Structure& with) const;

  /// All sites in preorder (which is lexicographic path order).
  std::vector<Site> sites() const;

  /// Label-free key; equal iff the structures are equal after erasing labels.
  std::string key() const;
  /// Key that also records which leaves carry a word label (not the label itself).
  std::string marked_key() const;
  /// Key including labels verbatim.
  std::string labelled_key() const;

  /// Deep equality including labels.
  friend bool operator==(const Structure& a, const Structure& b);
  friend bool operator!=(const Structure& a, const Structure& b) { return !(a == b); }

 private:
  explicit Structure(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  void append_key(std::string& out, int label_mode) const;
  std::shared_ptr<const Node> node_;
};

/// Equality after erasing word labels.
bool logically_equal(const Structure& a, const Structure& b);

struct Sequent {
  Structure antecedent;
  Formula succedent;
  friend bool operator==(const Sequent&, const Sequent&) = default;
};

/// Equal for two sequents iff they are equal after erasing word labels.
std::string canonical_sequent(const Sequent& s);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Formula parse_formula(std::string_view text);
std::string print_formula(const Formula& f);

/// ASCII rendering of a structure in the formula syntax; labelled leaves
/// print their word when `words` is set.
std::string print_structure(const Structure& s, bool words = true);
std::string print_sequent(const Sequent& s, bool words = true);

}  // namespace polarity

#endif  // POLARITY_CORE_HPP_
