#pragma once

#include <memory>
#include <vector>

#include "veritas/base_formula.hpp"
#include "veritas/nat.hpp"

namespace veritas {

// A sentence of the augmented language: a closed base sentence, T(n) for a
// numeral n, the two quantified T-atoms, or a connective combination.
// Immutable value type.
class Sentence {
 public:
  enum class Kind { Base, TApp, Not, Or, And, Imp, Iff, ExistsT, ForallT };

  // Throws std::invalid_argument when the formula has free variables.
  static Sentence base(BaseFormula closed_formula);
  static Sentence t_app(Nat numeral);
  static Sentence negation(Sentence inner);
  static Sentence disjunction(Sentence lhs, Sentence rhs);
  static Sentence conjunction(Sentence lhs, Sentence rhs);
  static Sentence implication(Sentence lhs, Sentence rhs);
  static Sentence biconditional(Sentence lhs, Sentence rhs);
  static Sentence exists_t();
  static Sentence forall_t();

  Kind kind() const;

  const BaseFormula& base_formula() const;  // Base
  const Nat& t_arg() const;                 // TApp
  Sentence child() const;                   // Not
  Sentence left() const;                    // binary
  Sentence right() const;                   // binary

  // Children at the sentence level: Not -> {child}, binary -> {left, right},
  // atoms -> {}.
  std::vector<Sentence> immediate_subsentences() const;

  bool operator==(const Sentence& other) const;
  bool operator!=(const Sentence& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Sentence(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace veritas
