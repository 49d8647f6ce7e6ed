#include "veritas/model.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace veritas {

FiniteModel::FiniteModel(Signature sig, std::size_t domain_size,
                         std::vector<std::set<Tuple>> relation_tuples,
                         std::vector<std::uint64_t> constant_values)
    : sig_(std::move(sig)),
      domain_size_(domain_size),
      relation_tuples_(std::move(relation_tuples)),
      constant_values_(std::move(constant_values)) {
  if (domain_size_ == 0) throw ModelError("empty domain");
  if (relation_tuples_.size() != sig_.relations().size()) {
    throw ModelError("one tuple set per relation symbol required");
  }
  if (constant_values_.size() != sig_.constants().size()) {
    throw ModelError("one value per constant symbol required");
  }
  for (std::size_t r = 0; r < relation_tuples_.size(); ++r) {
    const auto& rel = sig_.relations()[r];
    for (const Tuple& tuple : relation_tuples_[r]) {
      if (tuple.size() != rel.arity) {
        throw ModelError("arity mismatch in relation '" + rel.name + "'");
      }
      for (std::uint64_t component : tuple) {
        if (component >= domain_size_) {
          throw ModelError("tuple component out of range in relation '" + rel.name + "'");
        }
      }
    }
  }
  for (std::size_t c = 0; c < constant_values_.size(); ++c) {
    if (constant_values_[c] >= domain_size_) {
      throw ModelError("constant '" + sig_.constants()[c] + "' out of range");
    }
  }
}

bool FiniteModel::relation_holds(std::size_t rel_index, const Tuple& tuple) const {
  if (rel_index >= relation_tuples_.size()) {
    throw std::invalid_argument("signature mismatch: unknown relation index");
  }
  return relation_tuples_[rel_index].count(tuple) > 0;
}

std::uint64_t FiniteModel::constant_value(std::size_t index) const {
  if (index >= constant_values_.size()) {
    throw std::invalid_argument("signature mismatch: unknown constant index");
  }
  return constant_values_[index];
}

nlohmann::json FiniteModel::to_json() const {
  nlohmann::json relations = nlohmann::json::object();
  for (std::size_t r = 0; r < sig_.relations().size(); ++r) {
    nlohmann::json tuples = nlohmann::json::array();
    for (const Tuple& t : relation_tuples_[r]) tuples.push_back(t);
    relations[sig_.relations()[r].name] = {
        {"arity", sig_.relations()[r].arity}, {"tuples", tuples}};
  }
  nlohmann::json constants = nlohmann::json::object();
  for (std::size_t c = 0; c < sig_.constants().size(); ++c) {
    constants[sig_.constants()[c]] = constant_values_[c];
  }
  return {{"domain_size", domain_size_}, {"relations", relations}, {"constants", constants}};
}

namespace {

std::uint64_t require_nat(const nlohmann::json& v, const std::string& what) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  throw ModelError(what + " must be a natural number");
}

}  // namespace

FiniteModel validate_model(const nlohmann::json& description) {
  if (!description.is_object()) throw ModelError("model description must be a JSON object");
  if (!description.contains("domain_size")) throw ModelError("missing domain_size");
  std::uint64_t n = require_nat(description.at("domain_size"), "domain_size");
  if (n == 0) throw ModelError("empty domain");

  Signature sig;
  std::vector<std::set<FiniteModel::Tuple>> tuples;
  if (description.contains("relations")) {
    const auto& rels = description.at("relations");
    if (!rels.is_object()) throw ModelError("relations must be an object");
    for (auto it = rels.begin(); it != rels.end(); ++it) {
      const auto& body = it.value();
      if (!body.is_object() || !body.contains("arity")) {
        throw ModelError("relation '" + it.key() + "' needs an arity");
      }
      std::uint64_t arity = require_nat(body.at("arity"), "arity of '" + it.key() + "'");
      if (arity == 0) throw ModelError("relation '" + it.key() + "' must have arity >= 1");
      sig.add_relation(it.key(), static_cast<std::size_t>(arity));
      std::set<FiniteModel::Tuple> tuple_set;
      if (body.contains("tuples")) {
        if (!body.at("tuples").is_array()) throw ModelError("tuples must be an array");
        for (const auto& row : body.at("tuples")) {
          if (!row.is_array()) throw ModelError("each tuple must be an array");
          FiniteModel::Tuple tuple;
          for (const auto& component : row) {
            tuple.push_back(require_nat(component, "tuple component"));
          }
          tuple_set.insert(std::move(tuple));
        }
      }
      tuples.push_back(std::move(tuple_set));
    }
  }

  std::vector<std::uint64_t> constant_values;
  if (description.contains("constants")) {
    const auto& consts = description.at("constants");
    if (!consts.is_object()) throw ModelError("constants must be an object");
    for (auto it = consts.begin(); it != consts.end(); ++it) {
      sig.add_constant(it.key());
      constant_values.push_back(require_nat(it.value(), "constant '" + it.key() + "'"));
    }
  }

  return FiniteModel(std::move(sig), static_cast<std::size_t>(n), std::move(tuples),
                     std::move(constant_values));
}

namespace {

struct Binding {
  std::uint64_t var;
  std::uint64_t value;
};

std::uint64_t term_value(const FiniteModel& m, const Term& t, const std::vector<Binding>& env) {
  switch (t.kind) {
    case Term::Kind::Variable:
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->var == t.value) return it->value;
      }
      throw std::invalid_argument("signature mismatch: free variable in evaluation");
    case Term::Kind::Constant:
      return m.constant_value(static_cast<std::size_t>(t.value));
    case Term::Kind::Element:
      return t.value;
  }
  return 0;
}

bool eval_rec(const FiniteModel& m, const BaseFormula& f, std::vector<Binding>& env) {
  using Kind = BaseFormula::Kind;
  switch (f.kind()) {
    case Kind::Equal:
      return term_value(m, f.lhs_term(), env) == term_value(m, f.rhs_term(), env);
    case Kind::Relation: {
      if (f.relation_index() >= m.signature().relations().size() ||
          f.arguments().size() != m.signature().relations()[f.relation_index()].arity) {
        throw std::invalid_argument("signature mismatch: bad relation atom");
      }
      FiniteModel::Tuple tuple;
      tuple.reserve(f.arguments().size());
      for (const Term& t : f.arguments()) tuple.push_back(term_value(m, t, env));
      return m.relation_holds(f.relation_index(), tuple);
    }
    case Kind::Not:
      return !eval_rec(m, f.body(), env);
    case Kind::Or:
      return eval_rec(m, f.left(), env) || eval_rec(m, f.right(), env);
    case Kind::And:
      return eval_rec(m, f.left(), env) && eval_rec(m, f.right(), env);
    case Kind::Imp:
      return !eval_rec(m, f.left(), env) || eval_rec(m, f.right(), env);
    case Kind::Iff:
      return eval_rec(m, f.left(), env) == eval_rec(m, f.right(), env);
    case Kind::Exists: {
      for (std::uint64_t e = 0; e < m.domain_size(); ++e) {
        env.push_back({f.variable(), e});
        bool hit = eval_rec(m, f.body(), env);
        env.pop_back();
        if (hit) return true;
      }
      return false;
    }
    case Kind::Forall: {
      for (std::uint64_t e = 0; e < m.domain_size(); ++e) {
        env.push_back({f.variable(), e});
        bool hit = eval_rec(m, f.body(), env);
        env.pop_back();
        if (!hit) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool eval_base(const FiniteModel& m, const BaseFormula& closed_formula) {
  if (!closed_formula.is_closed()) {
    throw std::invalid_argument("eval_base requires a closed formula");
  }
  std::vector<Binding> env;
  return eval_rec(m, closed_formula, env);
}

}  // namespace veritas
