#pragma once

// Brute-force transcription of the membership rules and the stage iteration,
// kept separate from the engine: plain recursive functions, no shared verdict
// struct, no symbolic set type. Used to cross-check step() and
// least_fixed_point().

#include <set>

#include "veritas/godel.hpp"
#include "veritas/model.hpp"
#include "veritas/universe.hpp"

namespace oracle {

struct Stage {
  std::set<veritas::Nat> codes;
  bool all_true_base = false;

  bool operator==(const Stage&) const = default;
};

inline bool stage_has(const Stage& u, const veritas::Nat& code, const veritas::FiniteModel& m) {
  if (u.codes.count(code)) return true;
  if (!u.all_true_base) return false;
  auto s = veritas::decode(code, m.signature());
  return s && s->kind() == veritas::Sentence::Kind::Base &&
         veritas::eval_base(m, s->base_formula());
}

bool in_g(const veritas::Sentence& s, const Stage& u, const veritas::FiniteModel& m);
bool in_f(const veritas::Sentence& s, const Stage& u, const veritas::FiniteModel& m);

inline bool negation_in(const veritas::Sentence& a, const Stage& u,
                        const veritas::FiniteModel& m) {
  using veritas::Sentence;
  if (stage_has(u, veritas::encode(Sentence::negation(a)), m)) return true;
  if (a.kind() == Sentence::Kind::Base) {
    Sentence base_negation =
        Sentence::base(veritas::BaseFormula::negation(a.base_formula()));
    if (stage_has(u, veritas::encode(base_negation), m)) return true;
  }
  return false;
}

inline bool in_g(const veritas::Sentence& s, const Stage& u, const veritas::FiniteModel& m) {
  using Kind = veritas::Sentence::Kind;
  switch (s.kind()) {
    case Kind::Base:
      return veritas::eval_base(m, s.base_formula());
    case Kind::TApp: {
      auto referent = veritas::decode(s.t_arg(), m.signature());
      return referent.has_value() && stage_has(u, s.t_arg(), m);
    }
    case Kind::Not:
      return in_f(s.child(), u, m);
    case Kind::Or:
      return in_g(s.left(), u, m) || in_g(s.right(), u, m);
    case Kind::And:
      return in_g(s.left(), u, m) && in_g(s.right(), u, m);
    case Kind::Imp:
      return in_f(s.left(), u, m) || in_g(s.right(), u, m);
    case Kind::Iff:
      return (in_g(s.left(), u, m) && in_g(s.right(), u, m)) ||
             (in_f(s.left(), u, m) && in_f(s.right(), u, m));
    case Kind::ExistsT:
      return !u.codes.empty() || u.all_true_base;
    case Kind::ForallT:
      return false;
  }
  return false;
}

inline bool in_f(const veritas::Sentence& s, const Stage& u, const veritas::FiniteModel& m) {
  using Kind = veritas::Sentence::Kind;
  switch (s.kind()) {
    case Kind::Base:
      return !veritas::eval_base(m, s.base_formula());
    case Kind::TApp: {
      auto referent = veritas::decode(s.t_arg(), m.signature());
      return referent.has_value() && negation_in(*referent, u, m);
    }
    case Kind::Not:
      return in_g(s.child(), u, m);
    case Kind::Or:
      return in_f(s.left(), u, m) && in_f(s.right(), u, m);
    case Kind::And:
      return in_f(s.left(), u, m) || in_f(s.right(), u, m);
    case Kind::Imp:
      return in_g(s.left(), u, m) && in_f(s.right(), u, m);
    case Kind::Iff:
      return (in_g(s.left(), u, m) && in_f(s.right(), u, m)) ||
             (in_f(s.left(), u, m) && in_g(s.right(), u, m));
    case Kind::ExistsT:
      return false;
    case Kind::ForallT: {
      if (u.all_true_base) return true;  // a true negation-rooted base sentence exists
      for (const veritas::Nat& code : u.codes) {
        auto member = veritas::decode(code, m.signature());
        if (!member) continue;
        if (member->kind() == Kind::Not) return true;
        if (member->kind() == Kind::Base &&
            member->base_formula().kind() == veritas::BaseFormula::Kind::Not) {
          return true;
        }
      }
      return false;
    }
  }
  return false;
}

inline Stage stage_step(const Stage& u, const veritas::FiniteModel& m,
                        const veritas::Universe& universe) {
  Stage next;
  next.all_true_base = true;
  for (const auto& [code, s] : universe.members()) {
    if (in_g(s, u, m)) next.codes.insert(code);
  }
  return next;
}

inline Stage naive_lfp(const veritas::FiniteModel& m, const veritas::Universe& universe) {
  Stage current;
  for (;;) {
    Stage next = stage_step(current, m, universe);
    if (next == current) return current;
    current = next;
  }
}

}  // namespace oracle
