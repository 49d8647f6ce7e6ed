#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "veritas/model.hpp"
#include "veritas/truth_operator.hpp"
#include "veritas/universe.hpp"

namespace veritas {

// Deterministic source for the property suites: a fixed seed reproduces the
// exact sequence of models, universes, and stage sets.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  std::uint64_t below(std::uint64_t bound) { return bound <= 1 ? 0 : next_u64() % bound; }
  bool chance(std::uint64_t numerator, std::uint64_t denominator) {
    return below(denominator) < numerator;
  }

 private:
  std::mt19937_64 engine_;
};

// Small structures: up to three relations of arity 1-2, up to three
// constants, domain size 1-4.
FiniteModel random_model(Rng& rng);

BaseFormula random_base_sentence(Rng& rng, const FiniteModel& m, std::size_t depth);

// code_pool supplies T-application arguments that point at previously built
// sentences; junk numerals are mixed in.
Sentence random_sentence(Rng& rng, const FiniteModel& m, std::size_t depth,
                         const std::vector<Nat>& code_pool);

// Closure of a few random seeds, retried until it fits max_size members.
Universe random_universe(Rng& rng, const FiniteModel& m, std::size_t max_size);

// Random consistent stage set over the universe's codes, possibly flagged.
SymbolicCodeSet random_consistent_subset(Rng& rng, const Universe& universe,
                                         const FiniteModel& m);

}  // namespace veritas
