#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include <json.hpp>

#include "veritas/base_formula.hpp"
#include "veritas/errors.hpp"
#include "veritas/signature.hpp"

namespace veritas {

// A finite first-order structure: domain {0, ..., N-1}, one tuple set per
// relation symbol, one element per constant symbol. The structure fully
// interprets the base language: every closed formula evaluates to a single
// boolean. Immutable after construction.
class FiniteModel {
 public:
  using Tuple = std::vector<std::uint64_t>;

  // Validates all invariants; throws ModelError.
  FiniteModel(Signature sig, std::size_t domain_size,
              std::vector<std::set<Tuple>> relation_tuples,
              std::vector<std::uint64_t> constant_values);

  const Signature& signature() const { return sig_; }
  std::size_t domain_size() const { return domain_size_; }
  bool relation_holds(std::size_t rel_index, const Tuple& tuple) const;
  std::uint64_t constant_value(std::size_t index) const;

  nlohmann::json to_json() const;

  bool operator==(const FiniteModel&) const = default;

 private:
  Signature sig_;
  std::size_t domain_size_ = 1;
  std::vector<std::set<Tuple>> relation_tuples_;
  std::vector<std::uint64_t> constant_values_;
};

// Builds a model from the JSON schema
//   { "domain_size": nat,
//     "relations": { name: { "arity": nat, "tuples": [[nat, ...], ...] } },
//     "constants": { name: nat } }
// Symbols are ordered by name (JSON object order). Throws ModelError.
FiniteModel validate_model(const nlohmann::json& description);

// Classical Tarskian evaluation by exhaustive domain enumeration. Total on
// closed formulas over the model's signature; element numerals outside the
// domain denote naturals that satisfy no relation and equal only themselves.
// Throws std::invalid_argument on a signature mismatch.
bool eval_base(const FiniteModel& m, const BaseFormula& closed_formula);

}  // namespace veritas
