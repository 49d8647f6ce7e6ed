#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "veritas/truth_operator.hpp"

namespace veritas {

// No explicit code together with a spelling of its negation (checking
// flag-implied membership too).
bool is_consistent(const SymbolicCodeSet& u, const FiniteModel& m);

// Every member is in G(U); flag-implied membership is tested on universe
// members.
bool is_sound(const SymbolicCodeSet& u, const FiniteModel& m, const Universe& universe);

// One application of the operator restricted to the universe: the explicit
// part collects every universe code whose sentence is in G(U); the flag is on
// in the result (every true base code is in G(U) for any U).
SymbolicCodeSet step(const SymbolicCodeSet& u, const FiniteModel& m, const Universe& universe);

struct StageTrace {
  struct Stage {
    std::size_t index = 0;
    SymbolicCodeSet set;
    std::vector<Nat> added;  // explicit codes new at this stage
  };
  std::vector<Stage> stages;  // indices 0 .. stabilized_at
  std::size_t stabilized_at = 0;

  nlohmann::json to_json() const;
};

struct FixpointResult {
  Universe universe;
  FiniteModel model;
  SymbolicCodeSet set;  // the least fixed point: set == step(set)
  StageTrace trace;
};

// Iterates U_0 = empty, U_{i+1} = step(U_i) until stable. Stabilizes within
// |universe| + 1 steps; a longer run signals a bug and throws
// std::logic_error. The result is checked consistent and sound.
FixpointResult least_fixed_point(const Universe& universe, const FiniteModel& m);

// Same iteration from a caller-supplied seed, which must be consistent and
// sound (throws std::invalid_argument otherwise).
FixpointResult least_fixed_point_above(const SymbolicCodeSet& seed, const Universe& universe,
                                       const FiniteModel& m);

// Union of a chain of consistent sets is consistent. Inputs must be pairwise
// subset-comparable (throws std::invalid_argument otherwise); returns the
// consistency of the union.
bool check_chain_union(const std::vector<SymbolicCodeSet>& chain, const FiniteModel& m);

}  // namespace veritas
