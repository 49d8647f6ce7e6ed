#include "veritas/fixpoint.hpp"

#include <stdexcept>

#include "veritas/godel.hpp"

namespace veritas {

bool is_consistent(const SymbolicCodeSet& u, const FiniteModel& m) {
  for (const Nat& code : u.explicit_codes()) {
    auto s = decode(code, m.signature());
    if (!s) throw std::invalid_argument("explicit code does not decode to a sentence");
    // s together with some spelling of its negation.
    for (const Nat& neg : negation_codes(*s)) {
      if (u.contains(neg, m)) return false;
    }
    // s is itself a negation of something in u.
    if (s->kind() == Sentence::Kind::Not) {
      if (u.contains(encode(s->child()), m)) return false;
    }
    if (s->kind() == Sentence::Kind::Base &&
        s->base_formula().kind() == BaseFormula::Kind::Not) {
      if (u.contains(encode(Sentence::base(s->base_formula().body())), m)) return false;
    }
  }
  // The flag part alone is consistent: no base sentence and its negation are
  // both true under a total evaluation.
  return true;
}

bool is_sound(const SymbolicCodeSet& u, const FiniteModel& m, const Universe& universe) {
  for (const Nat& code : u.explicit_codes()) {
    auto s = decode(code, m.signature());
    if (!s) throw std::invalid_argument("explicit code does not decode to a sentence");
    if (!in_G(*s, u, m)) return false;
  }
  if (u.contains_all_true_base()) {
    for (const auto& [code, s] : universe.members()) {
      if (s.kind() == Sentence::Kind::Base && eval_base(m, s.base_formula()) &&
          !in_G(s, u, m)) {
        return false;
      }
    }
  }
  return true;
}

SymbolicCodeSet step(const SymbolicCodeSet& u, const FiniteModel& m, const Universe& universe) {
  SymbolicCodeSet next;
  next.set_contains_all_true_base(true);
  for (const auto& [code, s] : universe.members()) {
    if (in_G(s, u, m)) next.insert(code);
  }
  return next;
}

nlohmann::json StageTrace::to_json() const {
  nlohmann::json stage_array = nlohmann::json::array();
  for (const Stage& stage : stages) {
    nlohmann::json explicit_codes = nlohmann::json::array();
    for (const Nat& code : stage.set.explicit_codes()) explicit_codes.push_back(to_decimal(code));
    nlohmann::json added = nlohmann::json::array();
    for (const Nat& code : stage.added) added.push_back(to_decimal(code));
    stage_array.push_back({{"index", stage.index},
                           {"explicit", explicit_codes},
                           {"flag", stage.set.contains_all_true_base()},
                           {"added", added}});
  }
  return {{"stages", stage_array}, {"stabilized_at", stabilized_at}};
}

namespace {

std::vector<Nat> newly_added(const SymbolicCodeSet& before, const SymbolicCodeSet& after) {
  std::vector<Nat> added;
  for (const Nat& code : after.explicit_codes()) {
    if (!before.explicit_codes().count(code)) added.push_back(code);
  }
  return added;
}

FixpointResult iterate(SymbolicCodeSet seed, const Universe& universe, const FiniteModel& m) {
  StageTrace trace;
  std::vector<Nat> seed_codes(seed.explicit_codes().begin(), seed.explicit_codes().end());
  trace.stages.push_back({0, seed, std::move(seed_codes)});

  SymbolicCodeSet current = std::move(seed);
  std::size_t budget = universe.size() + 1;
  for (std::size_t i = 0;; ++i) {
    SymbolicCodeSet next = step(current, m, universe);
    if (next == current) {
      trace.stabilized_at = i;
      break;
    }
    if (i >= budget) {
      throw std::logic_error("fixed-point iteration exceeded its budget");
    }
    trace.stages.push_back({i + 1, next, newly_added(current, next)});
    current = std::move(next);
  }

  if (!is_consistent(current, m) || !is_sound(current, m, universe)) {
    throw std::logic_error("fixed point violates consistency or soundness");
  }
  return {universe, m, std::move(current), std::move(trace)};
}

}  // namespace

FixpointResult least_fixed_point(const Universe& universe, const FiniteModel& m) {
  return iterate(SymbolicCodeSet{}, universe, m);
}

FixpointResult least_fixed_point_above(const SymbolicCodeSet& seed, const Universe& universe,
                                       const FiniteModel& m) {
  if (!is_consistent(seed, m)) throw std::invalid_argument("seed set is not consistent");
  if (!is_sound(seed, m, universe)) throw std::invalid_argument("seed set is not sound");
  return iterate(seed, universe, m);
}

bool check_chain_union(const std::vector<SymbolicCodeSet>& chain, const FiniteModel& m) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!is_consistent(chain[i], m)) {
      throw std::invalid_argument("chain member " + std::to_string(i) + " is not consistent");
    }
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      if (!chain[i].subset_of(chain[j], m) && !chain[j].subset_of(chain[i], m)) {
        throw std::invalid_argument("inputs are not a chain: members " + std::to_string(i) +
                                    " and " + std::to_string(j) + " are incomparable");
      }
    }
  }
  SymbolicCodeSet unioned;
  for (const SymbolicCodeSet& part : chain) unioned = unioned.union_with(part);
  return is_consistent(unioned, m);
}

}  // namespace veritas
