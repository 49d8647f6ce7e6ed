#include "veritas/generators.hpp"

#include <algorithm>

#include "veritas/fixpoint.hpp"
#include "veritas/godel.hpp"

namespace veritas {

FiniteModel random_model(Rng& rng) {
  static const char* kRelationNames[] = {"P", "Q", "R"};
  static const char* kConstantNames[] = {"a", "b", "c"};

  Signature sig;
  std::size_t relation_count = rng.below(3);
  for (std::size_t r = 0; r < relation_count; ++r) {
    sig.add_relation(kRelationNames[r], 1 + rng.below(2));
  }
  std::size_t constant_count = rng.below(3);
  for (std::size_t c = 0; c < constant_count; ++c) {
    sig.add_constant(kConstantNames[c]);
  }

  std::size_t domain_size = 1 + rng.below(4);

  std::vector<std::set<FiniteModel::Tuple>> tuples(relation_count);
  for (std::size_t r = 0; r < relation_count; ++r) {
    std::size_t arity = sig.relations()[r].arity;
    std::size_t total = 1;
    for (std::size_t k = 0; k < arity; ++k) total *= domain_size;
    for (std::size_t t = 0; t < total; ++t) {
      if (!rng.chance(1, 2)) continue;
      FiniteModel::Tuple tuple;
      std::size_t rest = t;
      for (std::size_t k = 0; k < arity; ++k) {
        tuple.push_back(rest % domain_size);
        rest /= domain_size;
      }
      tuples[r].insert(std::move(tuple));
    }
  }

  std::vector<std::uint64_t> constants;
  for (std::size_t c = 0; c < constant_count; ++c) constants.push_back(rng.below(domain_size));

  return FiniteModel(std::move(sig), domain_size, std::move(tuples), std::move(constants));
}

namespace {

Term random_term(Rng& rng, const FiniteModel& m, const std::vector<std::uint64_t>& bound_vars) {
  for (;;) {
    switch (rng.below(3)) {
      case 0:
        if (!bound_vars.empty()) {
          return Term::variable(bound_vars[rng.below(bound_vars.size())]);
        }
        break;
      case 1:
        if (!m.signature().constants().empty()) {
          return Term::constant(rng.below(m.signature().constants().size()));
        }
        break;
      default:
        return Term::element(rng.below(m.domain_size()));
    }
  }
}

BaseFormula random_atom(Rng& rng, const FiniteModel& m,
                        const std::vector<std::uint64_t>& bound_vars) {
  const auto& rels = m.signature().relations();
  if (!rels.empty() && rng.chance(1, 2)) {
    std::size_t r = rng.below(rels.size());
    std::vector<Term> args;
    for (std::size_t k = 0; k < rels[r].arity; ++k) args.push_back(random_term(rng, m, bound_vars));
    return BaseFormula::relation(r, std::move(args));
  }
  Term lhs = random_term(rng, m, bound_vars);
  Term rhs = random_term(rng, m, bound_vars);
  return BaseFormula::equal(lhs, rhs);
}

// Draws are sequenced through named locals: argument evaluation order must
// not influence the stream.
BaseFormula random_base_rec(Rng& rng, const FiniteModel& m, std::size_t depth,
                            std::vector<std::uint64_t>& bound_vars) {
  if (depth == 0 || rng.chance(1, 3)) return random_atom(rng, m, bound_vars);
  std::uint64_t shape = rng.below(7);
  if (shape == 0) {
    return BaseFormula::negation(random_base_rec(rng, m, depth - 1, bound_vars));
  }
  if (shape >= 1 && shape <= 4) {
    BaseFormula lhs = random_base_rec(rng, m, depth - 1, bound_vars);
    BaseFormula rhs = random_base_rec(rng, m, depth - 1, bound_vars);
    switch (shape) {
      case 1:
        return BaseFormula::disjunction(std::move(lhs), std::move(rhs));
      case 2:
        return BaseFormula::conjunction(std::move(lhs), std::move(rhs));
      case 3:
        return BaseFormula::implication(std::move(lhs), std::move(rhs));
      default:
        return BaseFormula::biconditional(std::move(lhs), std::move(rhs));
    }
  }
  std::uint64_t var = bound_vars.size();
  bound_vars.push_back(var);
  BaseFormula body = random_base_rec(rng, m, depth - 1, bound_vars);
  bound_vars.pop_back();
  return rng.chance(1, 2) ? BaseFormula::exists(var, std::move(body))
                          : BaseFormula::forall(var, std::move(body));
}

}  // namespace

BaseFormula random_base_sentence(Rng& rng, const FiniteModel& m, std::size_t depth) {
  std::vector<std::uint64_t> bound_vars;
  return random_base_rec(rng, m, depth, bound_vars);
}

namespace {

// Nesting T-applications squares code values, so only modest codes are reused
// as arguments; this keeps generated codes within a few thousand bits.
constexpr std::size_t kMaxPooledCodeBits = 2048;

}  // namespace

Sentence random_sentence(Rng& rng, const FiniteModel& m, std::size_t depth,
                         const std::vector<Nat>& code_pool) {
  if (depth == 0 || rng.chance(1, 3)) {
    switch (rng.below(8)) {
      case 0:
        return Sentence::exists_t();
      case 1:
        return Sentence::forall_t();
      case 2:
      case 3: {
        // A pool code when available, junk numeral otherwise.
        std::vector<const Nat*> usable;
        for (const Nat& code : code_pool) {
          if (mpz_sizeinbase(code.get_mpz_t(), 2) <= kMaxPooledCodeBits) usable.push_back(&code);
        }
        if (!usable.empty() && rng.chance(3, 4)) {
          return Sentence::t_app(*usable[rng.below(usable.size())]);
        }
        return Sentence::t_app(Nat(static_cast<unsigned long>(rng.below(64))));
      }
      default:
        return Sentence::base(random_base_sentence(rng, m, 1 + rng.below(2)));
    }
  }
  std::uint64_t shape = rng.below(5);
  if (shape == 0) {
    return Sentence::negation(random_sentence(rng, m, depth - 1, code_pool));
  }
  Sentence lhs = random_sentence(rng, m, depth - 1, code_pool);
  Sentence rhs = random_sentence(rng, m, depth - 1, code_pool);
  switch (shape) {
    case 1:
      return Sentence::disjunction(std::move(lhs), std::move(rhs));
    case 2:
      return Sentence::conjunction(std::move(lhs), std::move(rhs));
    case 3:
      return Sentence::implication(std::move(lhs), std::move(rhs));
    default:
      return Sentence::biconditional(std::move(lhs), std::move(rhs));
  }
}

Universe random_universe(Rng& rng, const FiniteModel& m, std::size_t max_size) {
  for (std::size_t attempt = 0; attempt < 32; ++attempt) {
    std::vector<Sentence> seeds;
    std::vector<Nat> pool;
    std::size_t seed_count = 1 + rng.below(4);
    for (std::size_t i = 0; i < seed_count; ++i) {
      Sentence s = random_sentence(rng, m, 1 + rng.below(3), pool);
      pool.push_back(encode(s));
      seeds.push_back(std::move(s));
    }
    try {
      Universe u = referential_closure(seeds, m.signature(), max_size);
      if (u.size() >= 1) return u;
    } catch (const ClosureCapError&) {
      continue;  // try a smaller draw
    }
  }
  // Guaranteed-small fallback.
  return referential_closure({Sentence::base(tautology_formula())}, m.signature(), max_size);
}

SymbolicCodeSet random_consistent_subset(Rng& rng, const Universe& universe,
                                         const FiniteModel& m) {
  std::vector<Nat> codes;
  for (const auto& [code, s] : universe.members()) codes.push_back(code);
  // Fisher-Yates with the suite's own source.
  for (std::size_t i = codes.size(); i > 1; --i) {
    std::swap(codes[i - 1], codes[rng.below(i)]);
  }

  SymbolicCodeSet out;
  if (rng.chance(1, 2)) out.set_contains_all_true_base(true);
  for (const Nat& code : codes) {
    if (!rng.chance(1, 2)) continue;
    // Adding code keeps the set consistent iff no spelling of the sentence's
    // negation is present and the sentence does not negate a present one.
    auto s = decode(code, m.signature());
    if (!s) continue;
    bool clash = false;
    for (const Nat& neg : negation_codes(*s)) clash = clash || out.contains(neg, m);
    if (s->kind() == Sentence::Kind::Not) {
      clash = clash || out.contains(encode(s->child()), m);
    }
    if (s->kind() == Sentence::Kind::Base &&
        s->base_formula().kind() == BaseFormula::Kind::Not) {
      clash = clash || out.contains(encode(Sentence::base(s->base_formula().body())), m);
    }
    if (!clash) out.insert(code);
  }
  return out;
}

}  // namespace veritas
