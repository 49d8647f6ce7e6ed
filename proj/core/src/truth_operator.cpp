#include "veritas/truth_operator.hpp"

#include "veritas/godel.hpp"

namespace veritas {

bool is_true_base_code(const Nat& code, const FiniteModel& m) {
  auto s = decode(code, m.signature());
  return s && s->kind() == Sentence::Kind::Base && eval_base(m, s->base_formula());
}

bool SymbolicCodeSet::contains(const Nat& code, const FiniteModel& m) const {
  if (explicit_.count(code)) return true;
  return all_true_base_ && is_true_base_code(code, m);
}

bool SymbolicCodeSet::subset_of(const SymbolicCodeSet& other, const FiniteModel& m) const {
  if (all_true_base_ && !other.all_true_base_) return false;
  for (const Nat& code : explicit_) {
    if (!other.contains(code, m)) return false;
  }
  return true;
}

SymbolicCodeSet SymbolicCodeSet::union_with(const SymbolicCodeSet& other) const {
  SymbolicCodeSet out = *this;
  out.explicit_.insert(other.explicit_.begin(), other.explicit_.end());
  out.all_true_base_ = all_true_base_ || other.all_true_base_;
  return out;
}

std::vector<Nat> negation_codes(const Sentence& a) {
  std::vector<Nat> codes;
  codes.push_back(encode(Sentence::negation(a)));
  if (a.kind() == Sentence::Kind::Base) {
    codes.push_back(encode(Sentence::base(BaseFormula::negation(a.base_formula()))));
  }
  return codes;
}

bool is_negation_rooted(const Sentence& s) {
  if (s.kind() == Sentence::Kind::Not) return true;
  return s.kind() == Sentence::Kind::Base &&
         s.base_formula().kind() == BaseFormula::Kind::Not;
}

RuleVerdict evaluate_rules(const Sentence& s, const SymbolicCodeSet& u, const FiniteModel& m) {
  using Kind = Sentence::Kind;
  switch (s.kind()) {
    case Kind::Base: {
      bool value = eval_base(m, s.base_formula());
      return {value, !value};
    }
    case Kind::TApp: {
      auto referent = decode(s.t_arg(), m.signature());
      if (!referent) return {false, false};
      bool g = u.contains(s.t_arg(), m);
      bool f = false;
      for (const Nat& neg : negation_codes(*referent)) {
        if (u.contains(neg, m)) {
          f = true;
          break;
        }
      }
      return {g, f};
    }
    case Kind::Not: {
      RuleVerdict inner = evaluate_rules(s.child(), u, m);
      return {inner.in_f, inner.in_g};
    }
    case Kind::Or: {
      RuleVerdict a = evaluate_rules(s.left(), u, m);
      RuleVerdict b = evaluate_rules(s.right(), u, m);
      return {a.in_g || b.in_g, a.in_f && b.in_f};
    }
    case Kind::And: {
      RuleVerdict a = evaluate_rules(s.left(), u, m);
      RuleVerdict b = evaluate_rules(s.right(), u, m);
      return {a.in_g && b.in_g, a.in_f || b.in_f};
    }
    case Kind::Imp: {
      RuleVerdict a = evaluate_rules(s.left(), u, m);
      RuleVerdict b = evaluate_rules(s.right(), u, m);
      return {a.in_f || b.in_g, a.in_g && b.in_f};
    }
    case Kind::Iff: {
      RuleVerdict a = evaluate_rules(s.left(), u, m);
      RuleVerdict b = evaluate_rules(s.right(), u, m);
      return {(a.in_g && b.in_g) || (a.in_f && b.in_f),
              (a.in_g && b.in_f) || (a.in_f && b.in_g)};
    }
    case Kind::ExistsT:
      return {!u.denotes_empty(), false};
    case Kind::ForallT: {
      if (u.contains_all_true_base()) return {false, true};
      for (const Nat& code : u.explicit_codes()) {
        auto member = decode(code, m.signature());
        if (member && is_negation_rooted(*member)) return {false, true};
      }
      return {false, false};
    }
  }
  return {false, false};
}

bool in_G(const Sentence& s, const SymbolicCodeSet& u, const FiniteModel& m) {
  return evaluate_rules(s, u, m).in_g;
}

bool in_F(const Sentence& s, const SymbolicCodeSet& u, const FiniteModel& m) {
  return evaluate_rules(s, u, m).in_f;
}

MembershipVerdict membership_verdict(const Sentence& s, const SymbolicCodeSet& u,
                                     const FiniteModel& m) {
  RuleVerdict v = evaluate_rules(s, u, m);
  if (v.in_g) return MembershipVerdict::InG;
  if (v.in_f) return MembershipVerdict::InF;
  return MembershipVerdict::Neither;
}

}  // namespace veritas
