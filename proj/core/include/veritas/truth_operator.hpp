#pragma once

#include <set>
#include <vector>

#include "veritas/model.hpp"
#include "veritas/sentence.hpp"
#include "veritas/universe.hpp"

namespace veritas {

// A stage set U of sentence codes. The explicit part is finite; the
// contains_all_true_base flag adds the codes of every base sentence that is
// true in the model (an infinite set with decidable membership).
class SymbolicCodeSet {
 public:
  SymbolicCodeSet() = default;

  void insert(Nat code) { explicit_.insert(std::move(code)); }
  void set_contains_all_true_base(bool flag) { all_true_base_ = flag; }

  const std::set<Nat>& explicit_codes() const { return explicit_; }
  bool contains_all_true_base() const { return all_true_base_; }

  // Literal stage membership: explicit code or flag-implied true base code.
  bool contains(const Nat& code, const FiniteModel& m) const;

  // True when the denoted set is empty (no explicit codes, flag off).
  bool denotes_empty() const { return explicit_.empty() && !all_true_base_; }

  bool subset_of(const SymbolicCodeSet& other, const FiniteModel& m) const;
  SymbolicCodeSet union_with(const SymbolicCodeSet& other) const;

  bool operator==(const SymbolicCodeSet&) const = default;

 private:
  std::set<Nat> explicit_;
  bool all_true_base_ = false;
};

// True when the code decodes to a base sentence that the model makes true.
bool is_true_base_code(const Nat& code, const FiniteModel& m);

// All codes that spell the negation of a: the sentence-level negation !a, and
// for a base sentence additionally the base-level negation (a base sentence's
// negation is again a base sentence).
std::vector<Nat> negation_codes(const Sentence& a);

// Sentence-level negation, or a base sentence whose formula is a negation.
bool is_negation_rooted(const Sentence& s);

struct RuleVerdict {
  bool in_g = false;
  bool in_f = false;
};

// Membership of s in G(U) and F(U) in one pass. Structural recursion:
// base sentences by model evaluation; T(n) by decoding n and looking up n
// (for G) or a negation code (for F) in U; connectives compositionally; the
// quantified T-atoms by the closed forms the non-surjective numbering forces
// (see in_G/in_F below).
RuleVerdict evaluate_rules(const Sentence& s, const SymbolicCodeSet& u, const FiniteModel& m);

// exists x. T(x) is in G(U) iff U is nonempty, never in F(U); forall x. T(x)
// is never in G(U), and is in F(U) iff U contains a negation-rooted code
// (the flag always supplies one: a true negation-rooted base sentence exists
// in every model).
bool in_G(const Sentence& s, const SymbolicCodeSet& u, const FiniteModel& m);
bool in_F(const Sentence& s, const SymbolicCodeSet& u, const FiniteModel& m);

enum class MembershipVerdict { InG, InF, Neither };

MembershipVerdict membership_verdict(const Sentence& s, const SymbolicCodeSet& u,
                                     const FiniteModel& m);

}  // namespace veritas
