#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "veritas/fixpoint.hpp"
#include "veritas/truth_language.hpp"

namespace veritas {

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;  // at most kMaxRecordedFailures messages

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

inline constexpr std::size_t kMaxRecordedFailures = 16;

// One model/universe configuration for the lemma suites.
struct LemmaConfig {
  FiniteModel model;
  Universe universe;
};

std::vector<LemmaConfig> random_configs(std::uint64_t rng_seed, std::size_t count);

// The two-sentence universe from the seed T(702) over a one-element model
// with an empty signature.
LemmaConfig worked_config();

struct VerifyOptions {
  std::size_t roundtrip_count = 10000;
  std::size_t consistency_runs = 1000;
  std::size_t monotonicity_runs = 1000;
  std::size_t chain_runs = 200;
  std::size_t fixed_point_runs = 300;
  std::size_t lemma_configs = 200;
  std::uint64_t regress_horizon = 10;
  std::uint64_t regress_max_natural = 6;
};

// Encode/decode and parse/print round-trips, injectivity sampling, and the
// fixed numbering anchors.
SuiteResult suite_roundtrip(std::uint64_t rng_seed, std::size_t count);

// Applying the operator to a consistent stage set yields a consistent set,
// and no universe member lands in both G and F.
SuiteResult suite_consistency(std::uint64_t rng_seed, std::size_t runs);

// U subset of V implies step(U) subset of step(V).
SuiteResult suite_monotonicity(std::uint64_t rng_seed, std::size_t runs);

// Unions of stage-trace prefixes stay consistent.
SuiteResult suite_chain_unions(std::uint64_t rng_seed, std::size_t runs);

// Iteration stabilizes within |universe| + 1 steps with increasing sound
// stages; exhaustive subset search on universes of at most four sentences
// confirms the result is below every consistent fixed point.
SuiteResult suite_fixed_point(std::uint64_t rng_seed, std::size_t runs);

// A <-> T(#A) true and A <-> !T(#A) false across configurations.
SuiteResult suite_biconditionals(const std::vector<LemmaConfig>& configs);

// Base truth, valuation of A, and valuation of T(#A) agree.
SuiteResult suite_base_agreement(const std::vector<LemmaConfig>& configs);

// Stagewise valuation and demand-driven classification agree everywhere.
SuiteResult suite_evaluator_agreement(const std::vector<LemmaConfig>& configs);

// Classical truth tables at the base level and between determinate sentences
// of the fixed-point language.
SuiteResult suite_truth_tables(std::uint64_t rng_seed, const std::vector<LemmaConfig>& configs);

// exists x. T(x) valuates True and forall x. T(x) valuates False in the
// least fixed point of every universe containing them, with rule-expansion
// witnesses.
SuiteResult suite_quantified_t(const std::vector<LemmaConfig>& configs);

// Conditions (i)-(iii), the regress lemma clauses, and saturation exactly at
// Z = {omega}, exhaustively over naturals within {0..max_natural} and the
// omega flag.
SuiteResult suite_regress(std::uint64_t horizon, std::uint64_t max_natural);

// The bundled verification command: consistency, monotonicity, chain unions,
// biconditionals, base agreement, evaluator agreement, truth tables, regress.
// extra_configs are prepended to the random lemma configurations.
std::vector<SuiteResult> verify_all(std::uint64_t rng_seed, const VerifyOptions& options = {},
                                    const std::vector<LemmaConfig>& extra_configs = {});

}  // namespace veritas
