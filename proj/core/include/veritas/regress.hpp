#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include <json.hpp>

namespace veritas {

// A nonempty subset Z of S(omega) = {0, 1, 2, ...} + {omega}: finitely many
// listed naturals plus an omega-membership flag. The statement F_i ("i < beta
// for every beta in Z") is true exactly when i < min Z, so everything about
// the family reduces to the pivot min Z.
struct OmegaSet {
  std::set<std::uint64_t> naturals;
  bool has_omega = false;

  bool valid() const { return has_omega || !naturals.empty(); }

  // Least element; nullopt stands for omega.
  std::optional<std::uint64_t> pivot() const;

  bool operator==(const OmegaSet&) const = default;
};

// Truth of F_i under Z. Throws std::invalid_argument when Z is empty.
bool f_truth(std::uint64_t i, const OmegaSet& z);

// Statements of the regress: a single F_i, or the prefix disjunction
// F_0 | ... | F_{count-1} (count >= 1).
struct FStatement {
  std::uint64_t index = 0;
  bool operator==(const FStatement&) const = default;
};
struct FPrefixDisjunction {
  std::uint64_t count = 1;
  bool operator==(const FPrefixDisjunction&) const = default;
};
using RegressStatement = std::variant<FStatement, FPrefixDisjunction>;

// Truth in the world whose pivot is the given value (nullopt = omega).
bool statement_truth(const RegressStatement& s, std::optional<std::uint64_t> pivot);
bool statement_truth(const RegressStatement& s, const OmegaSet& z);

// a entails b when no world makes a true and b false. Worlds are the pivots
// {0, ..., horizon} plus omega, which is exact as long as the horizon covers
// every index involved (throws std::invalid_argument otherwise).
bool entails(const RegressStatement& a, const RegressStatement& b, std::uint64_t horizon);

// a justifies b under Z in exactly two cases: a entails b and a is true
// (modus ponens), or a <-> !b is true under Z and a is false.
bool justifies(const RegressStatement& a, const RegressStatement& b, const OmegaSet& z);

struct RegressReport {
  OmegaSet z;
  std::uint64_t horizon = 2;
  std::optional<std::uint64_t> pivot;  // nullopt = omega

  std::vector<bool> f_truths;          // F_0 .. F_horizon
  std::vector<bool> justifies_prev;    // [i-1]: does F_i justify F_{i-1}, i = 1..horizon

  bool cond_entails_chain = false;     // (i)   F_i entails F_{i-1}
  bool cond_no_entail_next = false;    // (ii)  the prefix disjunction never entails F_i
  bool cond_no_justify_next = false;   // (iii) nor justifies it
  bool saturated = false;              // (iv), decided exactly by the pivot

  // Lemma checks computed from the truth table.
  bool lemma_a_applicable = false;     // F_1 false
  bool lemma_a_all_false = true;       // then F_i false for all i > 0
  bool lemma_a_f0_matches_biconditional = true;  // F_0 justified iff F_0 <-> !F_1 true
  bool lemma_b_upward_truth = true;    // F_n true implies F_i true for i <= n
  bool lemma_c_saturation_iff_all_true = true;
  bool f0_justified = false;           // justifies(F_1, F_0, Z)

  bool pass() const;
  nlohmann::json to_json() const;
};

// Fills the report over F_0 .. F_horizon. Requires horizon >= 2 and a
// nonempty Z (throws std::invalid_argument).
RegressReport analyze_regress(const OmegaSet& z, std::uint64_t horizon);

}  // namespace veritas
