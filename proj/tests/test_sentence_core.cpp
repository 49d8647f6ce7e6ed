#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pairing_oracle.hpp"
#include "veritas/errors.hpp"
#include "veritas/generators.hpp"
#include "veritas/godel.hpp"
#include "veritas/pairing.hpp"
#include "veritas/text.hpp"
#include "veritas/universe.hpp"

using namespace veritas;

namespace {

Sentence taut() { return Sentence::base(tautology_formula()); }

Signature pq_signature() {
  Signature sig;
  sig.add_relation("P", 1);
  sig.add_relation("Q", 2);
  sig.add_constant("c");
  return sig;
}

}  // namespace

TEST_CASE("cantor pairing agrees with the iterated-addition oracle") {
  for (unsigned long a = 0; a < 25; ++a) {
    for (unsigned long b = 0; b < 25; ++b) {
      Nat expected = oracle::pair(a, b);
      CHECK(cantor_pair(a, b) == expected);
      auto [x, y] = cantor_unpair(expected);
      CHECK(x == a);
      CHECK(y == b);
    }
  }
}

TEST_CASE("numbering anchors") {
  CHECK(encode(Sentence::t_app(0)) == oracle::pair(1, 0));
  CHECK(encode(Sentence::t_app(0)) == 1);
  CHECK(encode(Sentence::exists_t()) == oracle::pair(7, 0));
  CHECK(encode(Sentence::exists_t()) == 28);
  CHECK(encode(Sentence::forall_t()) == oracle::pair(8, 0));
  CHECK(encode(Sentence::forall_t()) == 36);

  // forall v0. v0 = v0: base code pi(8, pi(0, pi(0, pi(0,0)))) = 36, then
  // sentence code pi(0, 36) = 702.
  unsigned long term_pair = oracle::pair(0, 0).get_ui();          // pi(tc(v0), tc(v0))
  unsigned long equality = oracle::pair(0, term_pair).get_ui();   // tag 0
  unsigned long quantifier_payload = oracle::pair(0, equality).get_ui();
  Nat base_code = oracle::pair(8, quantifier_payload);
  CHECK(base_code == 36);
  CHECK(encode_base(tautology_formula()) == base_code);
  CHECK(encode(taut()) == oracle::pair(0, 36));
  CHECK(encode(taut()) == 702);

  CHECK(encode(Sentence::t_app(702)) == oracle::pair(1, 702));
  CHECK(encode(Sentence::t_app(702)) == 248158);
}

TEST_CASE("decode anchors") {
  Signature sig;
  auto one = decode(1, sig);
  REQUIRE(one.has_value());
  CHECK(*one == Sentence::t_app(0));

  // 45 = pi(9, 0): tag 9 is undefined.
  CHECK(oracle::unpair(45).first == 9);
  CHECK(!decode(45, sig).has_value());

  auto base = decode(702, sig);
  REQUIRE(base.has_value());
  CHECK(*base == taut());

  // 0 = pi(0, 0): base payload decodes to v0 = v0, which is not closed.
  CHECK(!decode(0, sig).has_value());
}

TEST_CASE("parse examples") {
  Signature sig;
  CHECK(parse_sentence("T(702)", sig) == Sentence::t_app(702));
  CHECK(parse_sentence("exists x. T(x)", sig) == Sentence::exists_t());
  CHECK(parse_sentence("forall x. T(x)", sig) == Sentence::forall_t());

  Sentence expected =
      Sentence::negation(Sentence::disjunction(Sentence::t_app(0), taut()));
  CHECK(parse_sentence("!(T(0) | forall v0. v0 = v0)", sig) == expected);
  CHECK(parse_sentence("!(T(0) | [forall v0. v0 = v0])", sig) == expected);
}

TEST_CASE("print examples") {
  Signature sig;
  CHECK(print_sentence(Sentence::t_app(0), sig) == "T(0)");
  CHECK(print_sentence(Sentence::forall_t(), sig) == "forall x. T(x)");
  Sentence iff =
      Sentence::biconditional(Sentence::t_app(1), Sentence::negation(Sentence::t_app(1)));
  CHECK(print_sentence(iff, sig) == "(T(1) <-> !T(1))");
}

TEST_CASE("parse errors carry positions and reasons") {
  Signature sig = pq_signature();
  CHECK_THROWS_AS(parse_sentence("T(702", sig), ParseError);
  CHECK_THROWS_AS(parse_sentence("[R(0)]", sig), ParseError);      // unknown symbol
  CHECK_THROWS_AS(parse_sentence("[P(0, 1)]", sig), ParseError);   // arity mismatch
  CHECK_THROWS_AS(parse_sentence("[Q(0)]", sig), ParseError);      // arity mismatch
  CHECK_THROWS_AS(parse_sentence("[P(v0)]", sig), ParseError);     // free variable
  CHECK_THROWS_AS(parse_sentence("", sig), ParseError);
  try {
    parse_sentence("T(0) |", sig);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("closure examples") {
  Signature sig;
  SUBCASE("T(702) pulls in its referent") {
    Universe u = referential_closure({Sentence::t_app(702)}, sig);
    CHECK(u.size() == 2);
    CHECK(u.contains(Sentence::t_app(702)));
    CHECK(u.contains(taut()));
  }
  SUBCASE("atomic quantified T-sentence closes to itself") {
    Universe u = referential_closure({Sentence::exists_t()}, sig);
    CHECK(u.size() == 1);
  }
  SUBCASE("dereference chain stops at a non-coding numeral") {
    Sentence iff = Sentence::biconditional(Sentence::t_app(1), Sentence::t_app(1));
    Universe u = referential_closure({iff}, sig);
    // 1 decodes to T(0); 0 decodes to nothing.
    CHECK(u.size() == 3);
    CHECK(u.contains(iff));
    CHECK(u.contains(Sentence::t_app(1)));
    CHECK(u.contains(Sentence::t_app(0)));
    CHECK(!decode(0, sig).has_value());
  }
  SUBCASE("cap is enforced") {
    CHECK_THROWS_AS(referential_closure({Sentence::t_app(702)}, sig, 1), ClosureCapError);
  }
}

TEST_CASE("round-trip, injectivity, closure laws on random sentences") {
  Rng rng(7);
  for (int config = 0; config < 10; ++config) {
    FiniteModel m = random_model(rng);
    std::vector<Nat> pool;
    std::map<Nat, Sentence> seen;
    for (int i = 0; i < 60; ++i) {
      Sentence s = random_sentence(rng, m, rng.below(4), pool);
      Nat code = encode(s);
      pool.push_back(code);

      auto back = decode(code, m.signature());
      REQUIRE(back.has_value());
      CHECK(*back == s);

      std::string text = print_sentence(s, m.signature());
      CHECK(parse_sentence(text, m.signature()) == s);

      auto [it, fresh] = seen.emplace(code, s);
      if (!fresh) CHECK(it->second == s);
    }
    // Closure idempotence and monotonicity.
    std::vector<Sentence> xs, ys;
    for (int i = 0; i < 2; ++i) xs.push_back(random_sentence(rng, m, 2, pool));
    ys = xs;
    ys.push_back(random_sentence(rng, m, 2, pool));
    Universe cx = referential_closure(xs, m.signature());
    Universe cy = referential_closure(ys, m.signature());
    std::vector<Sentence> cx_members;
    for (const auto& [code, s] : cx.members()) cx_members.push_back(s);
    Universe cxx = referential_closure(cx_members, m.signature());
    CHECK(cxx.members().size() == cx.members().size());
    for (const auto& [code, s] : cx.members()) {
      CHECK(cxx.contains_code(code));
      CHECK(cy.contains_code(code));
    }
    // Closure invariants: subsentence- and referentially closed.
    for (const auto& [code, s] : cx.members()) {
      for (const Sentence& sub : s.immediate_subsentences()) {
        CHECK(cx.contains(sub));
      }
      if (s.kind() == Sentence::Kind::TApp) {
        if (auto referent = decode(s.t_arg(), m.signature())) {
          CHECK(cx.contains(*referent));
        }
      }
    }
  }
}

TEST_CASE("signature-dependent decode validates symbols") {
  Signature sig = pq_signature();
  // Relation atom P(c) survives the round trip under its signature but not
  // under the empty one.
  BaseFormula atom = BaseFormula::relation(0, {Term::constant(0)});
  Sentence s = Sentence::base(atom);
  Nat code = encode(s);
  CHECK(decode(code, sig).has_value());
  CHECK(!decode(code, Signature{}).has_value());
}
