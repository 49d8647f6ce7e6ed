#include "veritas/godel.hpp"

#include <vector>

#include "veritas/pairing.hpp"

namespace veritas {

namespace {

Nat encode_term(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Variable:
      return cantor_pair(0, Nat(static_cast<unsigned long>(t.value)));
    case Term::Kind::Constant:
      return cantor_pair(1, Nat(static_cast<unsigned long>(t.value)));
    case Term::Kind::Element:
      return cantor_pair(2, Nat(static_cast<unsigned long>(t.value)));
  }
  return 0;
}

std::optional<Term> decode_term(const Nat& code, const Signature& sig) {
  auto [tag, payload] = cantor_unpair(code);
  auto value = to_u64(payload);
  if (!value) return std::nullopt;
  if (tag == 0) return Term::variable(*value);
  if (tag == 1) {
    if (*value >= sig.constants().size()) return std::nullopt;
    return Term::constant(*value);
  }
  if (tag == 2) return Term::element(*value);
  return std::nullopt;
}

constexpr unsigned kEqual = 0, kRelation = 1, kNot = 2, kOr = 3, kAnd = 4, kImp = 5,
                   kIff = 6, kExists = 7, kForall = 8;

}  // namespace

Nat encode_base(const BaseFormula& f) {
  using Kind = BaseFormula::Kind;
  switch (f.kind()) {
    case Kind::Equal:
      return cantor_pair(kEqual, cantor_pair(encode_term(f.lhs_term()), encode_term(f.rhs_term())));
    case Kind::Relation: {
      Nat folded = 0;
      const auto& args = f.arguments();
      for (auto it = args.rbegin(); it != args.rend(); ++it) {
        folded = cantor_pair(encode_term(*it), folded);
      }
      return cantor_pair(kRelation,
                         cantor_pair(Nat(static_cast<unsigned long>(f.relation_index())), folded));
    }
    case Kind::Not:
      return cantor_pair(kNot, encode_base(f.body()));
    case Kind::Or:
      return cantor_pair(kOr, cantor_pair(encode_base(f.left()), encode_base(f.right())));
    case Kind::And:
      return cantor_pair(kAnd, cantor_pair(encode_base(f.left()), encode_base(f.right())));
    case Kind::Imp:
      return cantor_pair(kImp, cantor_pair(encode_base(f.left()), encode_base(f.right())));
    case Kind::Iff:
      return cantor_pair(kIff, cantor_pair(encode_base(f.left()), encode_base(f.right())));
    case Kind::Exists:
      return cantor_pair(kExists, cantor_pair(Nat(static_cast<unsigned long>(f.variable())),
                                              encode_base(f.body())));
    case Kind::Forall:
      return cantor_pair(kForall, cantor_pair(Nat(static_cast<unsigned long>(f.variable())),
                                              encode_base(f.body())));
  }
  return 0;
}

Nat encode(const Sentence& s) {
  using Kind = Sentence::Kind;
  switch (s.kind()) {
    case Kind::Base:
      return cantor_pair(0, encode_base(s.base_formula()));
    case Kind::TApp:
      return cantor_pair(1, s.t_arg());
    case Kind::Not:
      return cantor_pair(2, encode(s.child()));
    case Kind::Or:
      return cantor_pair(3, cantor_pair(encode(s.left()), encode(s.right())));
    case Kind::And:
      return cantor_pair(4, cantor_pair(encode(s.left()), encode(s.right())));
    case Kind::Imp:
      return cantor_pair(5, cantor_pair(encode(s.left()), encode(s.right())));
    case Kind::Iff:
      return cantor_pair(6, cantor_pair(encode(s.left()), encode(s.right())));
    case Kind::ExistsT:
      return cantor_pair(7, 0);
    case Kind::ForallT:
      return cantor_pair(8, 0);
  }
  return 0;
}

std::optional<BaseFormula> decode_base(const Nat& code, const Signature& sig) {
  auto [tag, payload] = cantor_unpair(code);
  if (tag == kEqual) {
    auto [l, r] = cantor_unpair(payload);
    auto lt = decode_term(l, sig);
    auto rt = decode_term(r, sig);
    if (!lt || !rt) return std::nullopt;
    return BaseFormula::equal(*lt, *rt);
  }
  if (tag == kRelation) {
    auto [rel, folded] = cantor_unpair(payload);
    auto rel_index = to_u64(rel);
    if (!rel_index || *rel_index >= sig.relations().size()) return std::nullopt;
    std::size_t arity = sig.relations()[static_cast<std::size_t>(*rel_index)].arity;
    std::vector<Term> args;
    Nat rest = folded;
    for (std::size_t i = 0; i < arity; ++i) {
      auto [head, tail] = cantor_unpair(rest);
      auto t = decode_term(head, sig);
      if (!t) return std::nullopt;
      args.push_back(*t);
      rest = tail;
    }
    if (rest != 0) return std::nullopt;
    return BaseFormula::relation(static_cast<std::size_t>(*rel_index), std::move(args));
  }
  if (tag == kNot) {
    auto inner = decode_base(payload, sig);
    if (!inner) return std::nullopt;
    return BaseFormula::negation(*inner);
  }
  if (tag == kOr || tag == kAnd || tag == kImp || tag == kIff) {
    auto [l, r] = cantor_unpair(payload);
    auto lf = decode_base(l, sig);
    auto rf = decode_base(r, sig);
    if (!lf || !rf) return std::nullopt;
    if (tag == kOr) return BaseFormula::disjunction(*lf, *rf);
    if (tag == kAnd) return BaseFormula::conjunction(*lf, *rf);
    if (tag == kImp) return BaseFormula::implication(*lf, *rf);
    return BaseFormula::biconditional(*lf, *rf);
  }
  if (tag == kExists || tag == kForall) {
    auto [var, body_code] = cantor_unpair(payload);
    auto var_index = to_u64(var);
    if (!var_index) return std::nullopt;
    auto body = decode_base(body_code, sig);
    if (!body) return std::nullopt;
    return tag == kExists ? BaseFormula::exists(*var_index, *body)
                          : BaseFormula::forall(*var_index, *body);
  }
  return std::nullopt;
}

std::optional<Sentence> decode(const Nat& code, const Signature& sig) {
  auto [tag, payload] = cantor_unpair(code);
  if (tag == 0) {
    auto f = decode_base(payload, sig);
    if (!f || !f->is_closed()) return std::nullopt;
    return Sentence::base(*f);
  }
  if (tag == 1) return Sentence::t_app(payload);
  if (tag == 2) {
    auto inner = decode(payload, sig);
    if (!inner) return std::nullopt;
    return Sentence::negation(*inner);
  }
  if (tag >= 3 && tag <= 6) {
    auto [l, r] = cantor_unpair(payload);
    auto ls = decode(l, sig);
    auto rs = decode(r, sig);
    if (!ls || !rs) return std::nullopt;
    if (tag == 3) return Sentence::disjunction(*ls, *rs);
    if (tag == 4) return Sentence::conjunction(*ls, *rs);
    if (tag == 5) return Sentence::implication(*ls, *rs);
    return Sentence::biconditional(*ls, *rs);
  }
  if (tag == 7) return payload == 0 ? std::optional<Sentence>(Sentence::exists_t()) : std::nullopt;
  if (tag == 8) return payload == 0 ? std::optional<Sentence>(Sentence::forall_t()) : std::nullopt;
  return std::nullopt;
}

}  // namespace veritas
