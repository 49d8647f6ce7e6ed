#include "veritas/sentence.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace veritas {

struct Sentence::Node {
  Kind kind;
  std::optional<BaseFormula> base;
  Nat t_arg;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

Sentence Sentence::base(BaseFormula closed_formula) {
  if (!closed_formula.is_closed()) {
    throw std::invalid_argument("base sentence must be a closed formula");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Base;
  n->base = std::move(closed_formula);
  return Sentence(std::move(n));
}

Sentence Sentence::t_app(Nat numeral) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::TApp;
  n->t_arg = std::move(numeral);
  return Sentence(std::move(n));
}

Sentence Sentence::negation(Sentence inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->left = std::move(inner.node_);
  return Sentence(std::move(n));
}

Sentence Sentence::disjunction(Sentence lhs, Sentence rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->left = std::move(lhs.node_);
  n->right = std::move(rhs.node_);
  return Sentence(std::move(n));
}

Sentence Sentence::conjunction(Sentence lhs, Sentence rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->left = std::move(lhs.node_);
  n->right = std::move(rhs.node_);
  return Sentence(std::move(n));
}

Sentence Sentence::implication(Sentence lhs, Sentence rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Imp;
  n->left = std::move(lhs.node_);
  n->right = std::move(rhs.node_);
  return Sentence(std::move(n));
}

Sentence Sentence::biconditional(Sentence lhs, Sentence rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Iff;
  n->left = std::move(lhs.node_);
  n->right = std::move(rhs.node_);
  return Sentence(std::move(n));
}

Sentence Sentence::exists_t() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::ExistsT;
  return Sentence(std::move(n));
}

Sentence Sentence::forall_t() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::ForallT;
  return Sentence(std::move(n));
}

Sentence::Kind Sentence::kind() const { return node_->kind; }

const BaseFormula& Sentence::base_formula() const {
  if (node_->kind != Kind::Base) throw std::logic_error("not a base sentence");
  return *node_->base;
}

const Nat& Sentence::t_arg() const {
  if (node_->kind != Kind::TApp) throw std::logic_error("not a T-application");
  return node_->t_arg;
}

Sentence Sentence::child() const {
  if (node_->kind != Kind::Not) throw std::logic_error("not a negation");
  return Sentence(node_->left);
}

Sentence Sentence::left() const {
  switch (node_->kind) {
    case Kind::Or:
    case Kind::And:
    case Kind::Imp:
    case Kind::Iff:
      return Sentence(node_->left);
    default:
      throw std::logic_error("not a binary connective");
  }
}

Sentence Sentence::right() const {
  switch (node_->kind) {
    case Kind::Or:
    case Kind::And:
    case Kind::Imp:
    case Kind::Iff:
      return Sentence(node_->right);
    default:
      throw std::logic_error("not a binary connective");
  }
}

std::vector<Sentence> Sentence::immediate_subsentences() const {
  switch (node_->kind) {
    case Kind::Not:
      return {child()};
    case Kind::Or:
    case Kind::And:
    case Kind::Imp:
    case Kind::Iff:
      return {left(), right()};
    default:
      return {};
  }
}

bool Sentence::operator==(const Sentence& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Base:
      return base_formula() == other.base_formula();
    case Kind::TApp:
      return t_arg() == other.t_arg();
    case Kind::Not:
      return child() == other.child();
    case Kind::Or:
    case Kind::And:
    case Kind::Imp:
    case Kind::Iff:
      return left() == other.left() && right() == other.right();
    case Kind::ExistsT:
    case Kind::ForallT:
      return true;
  }
  return false;
}

}  // namespace veritas
