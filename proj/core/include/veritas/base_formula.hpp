#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <vector>

#include "veritas/signature.hpp"

namespace veritas {

// A term of the base language: a variable v<i>, a constant (by signature
// index), or an element numeral.
struct Term {
  enum class Kind { Variable, Constant, Element };

  Kind kind = Kind::Element;
  std::uint64_t value = 0;  // variable index, constant index, or element value

  static Term variable(std::uint64_t index) { return {Kind::Variable, index}; }
  static Term constant(std::uint64_t index) { return {Kind::Constant, index}; }
  static Term element(std::uint64_t value) { return {Kind::Element, value}; }

  bool operator==(const Term&) const = default;
};

// First-order formula over a signature: equality and relation atoms, the five
// connectives, and quantifiers over indexed variables. Immutable value type;
// copies share structure.
class BaseFormula {
 public:
  enum class Kind { Equal, Relation, Not, Or, And, Imp, Iff, Exists, Forall };

  static BaseFormula equal(Term lhs, Term rhs);
  static BaseFormula relation(std::size_t rel_index, std::vector<Term> args);
  static BaseFormula negation(BaseFormula inner);
  static BaseFormula disjunction(BaseFormula lhs, BaseFormula rhs);
  static BaseFormula conjunction(BaseFormula lhs, BaseFormula rhs);
  static BaseFormula implication(BaseFormula lhs, BaseFormula rhs);
  static BaseFormula biconditional(BaseFormula lhs, BaseFormula rhs);
  static BaseFormula exists(std::uint64_t var, BaseFormula body);
  static BaseFormula forall(std::uint64_t var, BaseFormula body);

  Kind kind() const;

  // Equal
  const Term& lhs_term() const;
  const Term& rhs_term() const;
  // Relation
  std::size_t relation_index() const;
  const std::vector<Term>& arguments() const;
  // Not / quantifiers
  BaseFormula body() const;
  std::uint64_t variable() const;
  // Binary connectives
  BaseFormula left() const;
  BaseFormula right() const;

  std::set<std::uint64_t> free_variables() const;
  bool is_closed() const { return free_variables().empty(); }

  // True when every relation index exists in the signature with matching
  // arity and every constant index is in range.
  bool well_signed(const Signature& sig) const;

  bool operator==(const BaseFormula& other) const;
  bool operator!=(const BaseFormula& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit BaseFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// The sentence forall v0. v0 = v0, true in every model.
BaseFormula tautology_formula();

// The sentence !exists v0. !(v0 = v0) — a true negation-rooted base sentence
// available in every model.
BaseFormula negation_rooted_tautology();

}  // namespace veritas
