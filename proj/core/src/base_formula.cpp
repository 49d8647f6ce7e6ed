#include "veritas/base_formula.hpp"

#include <stdexcept>
#include <utility>

namespace veritas {

struct BaseFormula::Node {
  Kind kind;
  Term lhs, rhs;                      // Equal
  std::size_t rel_index = 0;          // Relation
  std::vector<Term> args;             // Relation
  std::uint64_t var = 0;              // Exists / Forall
  std::shared_ptr<const Node> left;   // unary body or binary left
  std::shared_ptr<const Node> right;  // binary right
};

BaseFormula BaseFormula::equal(Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Equal;
  n->lhs = lhs;
  n->rhs = rhs;
  return BaseFormula(std::move(n));
}

BaseFormula BaseFormula::relation(std::size_t rel_index, std::vector<Term> args) {
  if (args.empty()) throw std::logic_error("relation atom needs at least one argument");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Relation;
  n->rel_index = rel_index;
  n->args = std::move(args);
  return BaseFormula(std::move(n));
}

BaseFormula BaseFormula::negation(BaseFormula inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->left = std::move(inner.node_);
  return BaseFormula(std::move(n));
}

BaseFormula BaseFormula::disjunction(BaseFormula lhs, BaseFormula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->left = std::move(lhs.node_);
  n->right = std::move(rhs.node_);
  return BaseFormula(std::move(n));
}

BaseFormula BaseFormula::conjunction(BaseFormula lhs, BaseFormula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->left = std::move(lhs.node_);
  n->right = std::move(rhs.node_);
  return BaseFormula(std::move(n));
}

BaseFormula BaseFormula::implication(BaseFormula lhs, BaseFormula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Imp;
  n->left = std::move(lhs.node_);
  n->right = std::move(rhs.node_);
  return BaseFormula(std::move(n));
}

BaseFormula BaseFormula::biconditional(BaseFormula lhs, BaseFormula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Iff;
  n->left = std::move(lhs.node_);
  n->right = std::move(rhs.node_);
  return BaseFormula(std::move(n));
}

BaseFormula BaseFormula::exists(std::uint64_t var, BaseFormula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Exists;
  n->var = var;
  n->left = std::move(body.node_);
  return BaseFormula(std::move(n));
}

BaseFormula BaseFormula::forall(std::uint64_t var, BaseFormula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Forall;
  n->var = var;
  n->left = std::move(body.node_);
  return BaseFormula(std::move(n));
}

BaseFormula::Kind BaseFormula::kind() const { return node_->kind; }

const Term& BaseFormula::lhs_term() const {
  if (node_->kind != Kind::Equal) throw std::logic_error("not an equality atom");
  return node_->lhs;
}

const Term& BaseFormula::rhs_term() const {
  if (node_->kind != Kind::Equal) throw std::logic_error("not an equality atom");
  return node_->rhs;
}

std::size_t BaseFormula::relation_index() const {
  if (node_->kind != Kind::Relation) throw std::logic_error("not a relation atom");
  return node_->rel_index;
}

const std::vector<Term>& BaseFormula::arguments() const {
  if (node_->kind != Kind::Relation) throw std::logic_error("not a relation atom");
  return node_->args;
}

BaseFormula BaseFormula::body() const {
  switch (node_->kind) {
    case Kind::Not:
    case Kind::Exists:
    case Kind::Forall:
      return BaseFormula(node_->left);
    default:
      throw std::logic_error("formula has no body");
  }
}

std::uint64_t BaseFormula::variable() const {
  if (node_->kind != Kind::Exists && node_->kind != Kind::Forall) {
    throw std::logic_error("not a quantified formula");
  }
  return node_->var;
}

BaseFormula BaseFormula::left() const {
  switch (node_->kind) {
    case Kind::Or:
    case Kind::And:
    case Kind::Imp:
    case Kind::Iff:
      return BaseFormula(node_->left);
    default:
      throw std::logic_error("not a binary connective");
  }
}

BaseFormula BaseFormula::right() const {
  switch (node_->kind) {
    case Kind::Or:
    case Kind::And:
    case Kind::Imp:
    case Kind::Iff:
      return BaseFormula(node_->right);
    default:
      throw std::logic_error("not a binary connective");
  }
}

namespace {

void collect_free(const BaseFormula& f, std::set<std::uint64_t>& bound,
                  std::set<std::uint64_t>& free) {
  using Kind = BaseFormula::Kind;
  switch (f.kind()) {
    case Kind::Equal: {
      for (const Term* t : {&f.lhs_term(), &f.rhs_term()}) {
        if (t->kind == Term::Kind::Variable && !bound.count(t->value)) free.insert(t->value);
      }
      return;
    }
    case Kind::Relation: {
      for (const Term& t : f.arguments()) {
        if (t.kind == Term::Kind::Variable && !bound.count(t.value)) free.insert(t.value);
      }
      return;
    }
    case Kind::Not:
      collect_free(f.body(), bound, free);
      return;
    case Kind::Or:
    case Kind::And:
    case Kind::Imp:
    case Kind::Iff:
      collect_free(f.left(), bound, free);
      collect_free(f.right(), bound, free);
      return;
    case Kind::Exists:
    case Kind::Forall: {
      bool fresh = bound.insert(f.variable()).second;
      collect_free(f.body(), bound, free);
      if (fresh) bound.erase(f.variable());
      return;
    }
  }
}

}  // namespace

std::set<std::uint64_t> BaseFormula::free_variables() const {
  std::set<std::uint64_t> bound, free;
  collect_free(*this, bound, free);
  return free;
}

bool BaseFormula::well_signed(const Signature& sig) const {
  auto term_ok = [&](const Term& t) {
    return t.kind != Term::Kind::Constant || t.value < sig.constants().size();
  };
  switch (kind()) {
    case Kind::Equal:
      return term_ok(lhs_term()) && term_ok(rhs_term());
    case Kind::Relation: {
      if (relation_index() >= sig.relations().size()) return false;
      if (arguments().size() != sig.relations()[relation_index()].arity) return false;
      for (const Term& t : arguments()) {
        if (!term_ok(t)) return false;
      }
      return true;
    }
    case Kind::Not:
      return body().well_signed(sig);
    case Kind::Or:
    case Kind::And:
    case Kind::Imp:
    case Kind::Iff:
      return left().well_signed(sig) && right().well_signed(sig);
    case Kind::Exists:
    case Kind::Forall:
      return body().well_signed(sig);
  }
  return false;
}

bool BaseFormula::operator==(const BaseFormula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Equal:
      return lhs_term() == other.lhs_term() && rhs_term() == other.rhs_term();
    case Kind::Relation:
      return relation_index() == other.relation_index() && arguments() == other.arguments();
    case Kind::Not:
      return body() == other.body();
    case Kind::Or:
    case Kind::And:
    case Kind::Imp:
    case Kind::Iff:
      return left() == other.left() && right() == other.right();
    case Kind::Exists:
    case Kind::Forall:
      return variable() == other.variable() && body() == other.body();
  }
  return false;
}

BaseFormula tautology_formula() {
  return BaseFormula::forall(0, BaseFormula::equal(Term::variable(0), Term::variable(0)));
}

BaseFormula negation_rooted_tautology() {
  return BaseFormula::negation(BaseFormula::exists(
      0, BaseFormula::negation(BaseFormula::equal(Term::variable(0), Term::variable(0)))));
}

}  // namespace veritas
