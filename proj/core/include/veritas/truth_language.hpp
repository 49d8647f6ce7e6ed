#pragma once

#include <string>

#include <json.hpp>

#include "veritas/fixpoint.hpp"

namespace veritas {

enum class Valuation { True, False, Undetermined };

const char* to_string(Valuation v);

// Truth value of s at the computed least fixed point: True when in G, False
// when in F, Undetermined otherwise. Membership queries that leave the
// universe are resolved by the fixed-point equation U = G(U) itself (the
// universe records only its own codes; outside it, membership of a code is
// membership of its decoded sentence in G). s must reference only sentences
// of the universe; otherwise throws MissingReferenceError naming them.
Valuation valuation(const Sentence& s, const FixpointResult& fp);

struct VerificationReport {
  struct Failure {
    std::string sentence;
    std::string expected;
    std::string got;
  };

  std::size_t checked = 0;
  std::vector<Failure> failures;

  bool pass() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

// For every determinate sentence A of the universe: A <-> T(#A) valuates
// True and A <-> !T(#A) valuates False. The biconditionals are built on the
// fly; they need not belong to the universe.
VerificationReport verify_biconditionals(const FixpointResult& fp);

// For every base sentence A of the universe: model truth of A, the valuation
// of A, and the valuation of T(#A) agree (all true or all false).
VerificationReport verify_base_agreement(const FixpointResult& fp);

// Demand-driven classification against the least fixed point, with no stage
// computation: base sentences by evaluation, T(n) by decode-and-recurse
// (arguments strictly decrease, so the recursion terminates), connectives by
// the strong-Kleene-style tables the rules induce, exists x. T(x) True and
// forall x. T(x) False. Undetermined means ungrounded. Independent of
// valuation(); the two agreeing is the main internal cross-check.
Valuation classify_grounded(const Sentence& s, const FiniteModel& m);

}  // namespace veritas
