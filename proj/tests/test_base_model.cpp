#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "veritas/generators.hpp"
#include "veritas/model.hpp"
#include "veritas/text.hpp"

using namespace veritas;

namespace {

nlohmann::json p_model_json() {
  return {{"domain_size", 2},
          {"relations", {{"P", {{"arity", 1}, {"tuples", {{0}}}}}}},
          {"constants", nlohmann::json::object()}};
}

}  // namespace

TEST_CASE("validate_model accepts the P-model") {
  FiniteModel m = validate_model(p_model_json());
  CHECK(m.domain_size() == 2);
  CHECK(m.signature().relations().size() == 1);
  CHECK(m.relation_holds(0, {0}));
  CHECK(!m.relation_holds(0, {1}));
}

TEST_CASE("validate_model rejects bad descriptions") {
  auto doc = p_model_json();
  doc["domain_size"] = 0;
  CHECK_THROWS_WITH_AS(validate_model(doc), "empty domain", ModelError);

  doc = p_model_json();
  doc["relations"]["P"]["tuples"] = {{0, 1}};
  CHECK_THROWS_AS(validate_model(doc), ModelError);  // arity mismatch

  doc = p_model_json();
  doc["relations"]["P"]["tuples"] = {{5}};
  CHECK_THROWS_AS(validate_model(doc), ModelError);  // out of range

  doc = p_model_json();
  doc["constants"]["P"] = 0;
  CHECK_THROWS_AS(validate_model(doc), ModelError);  // duplicate symbol

  doc = p_model_json();
  doc["constants"]["c"] = 7;
  CHECK_THROWS_AS(validate_model(doc), ModelError);  // constant out of range

  doc = p_model_json();
  doc["relations"]["P"]["arity"] = 0;
  CHECK_THROWS_AS(validate_model(doc), ModelError);

  doc = p_model_json();
  doc["relations"]["T"] = {{"arity", 1}};
  CHECK_THROWS_AS(validate_model(doc), ModelError);  // reserved name

  CHECK_THROWS_AS(validate_model(nlohmann::json::object()), ModelError);  // no domain_size
}

TEST_CASE("eval_base on the worked examples") {
  FiniteModel m = validate_model(p_model_json());
  const Signature& sig = m.signature();

  CHECK(!eval_base(m, parse_base_formula("forall v0. P(v0)", sig)));
  CHECK(eval_base(m, parse_base_formula("forall v0. v0 = v0", sig)));
  CHECK(!eval_base(m, parse_base_formula("exists v0. (P(v0) & !P(v0))", sig)));
  CHECK(eval_base(m, parse_base_formula("exists v0. P(v0)", sig)));
}

TEST_CASE("element numerals outside the domain denote fresh naturals") {
  FiniteModel m = validate_model(p_model_json());
  const Signature& sig = m.signature();
  CHECK(eval_base(m, parse_base_formula("7 = 7", sig)));
  CHECK(!eval_base(m, parse_base_formula("exists v0. v0 = 7", sig)));
  CHECK(!eval_base(m, parse_base_formula("P(7)", sig)));
}

TEST_CASE("signature mismatch is an error") {
  FiniteModel m = validate_model(p_model_json());
  BaseFormula foreign = BaseFormula::relation(3, {Term::element(0)});
  CHECK_THROWS_AS(eval_base(m, foreign), std::invalid_argument);
  CHECK_THROWS_AS(eval_base(m, BaseFormula::relation(0, {Term::element(0), Term::element(0)})),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_base(m, BaseFormula::equal(Term::variable(0), Term::variable(0))),
                  std::invalid_argument);  // not closed
}

TEST_CASE("totality and classical laws on random sentences") {
  Rng rng(11);
  for (int run = 0; run < 300; ++run) {
    FiniteModel m = random_model(rng);
    BaseFormula a = random_base_sentence(rng, m, 2);
    BaseFormula b = random_base_sentence(rng, m, 2);

    bool ea = eval_base(m, a);  // never throws on closed well-signed input
    bool eb = eval_base(m, b);
    CHECK(eval_base(m, BaseFormula::negation(a)) == !ea);
    CHECK(eval_base(m, BaseFormula::disjunction(a, b)) == (ea || eb));
    CHECK(eval_base(m, BaseFormula::conjunction(a, b)) == (ea && eb));
    CHECK(eval_base(m, BaseFormula::implication(a, b)) == (!ea || eb));
    CHECK(eval_base(m, BaseFormula::biconditional(a, b)) == (ea == eb));

    // not-forall = exists-not, over a variable unused elsewhere
    BaseFormula body = random_base_sentence(rng, m, 2);
    CHECK(eval_base(m, BaseFormula::negation(BaseFormula::forall(40, body))) ==
          eval_base(m, BaseFormula::exists(40, BaseFormula::negation(body))));
  }
}

TEST_CASE("a true negation-rooted base sentence exists in every model") {
  Rng rng(13);
  for (int run = 0; run < 50; ++run) {
    FiniteModel m = random_model(rng);
    CHECK(eval_base(m, negation_rooted_tautology()));
    CHECK(negation_rooted_tautology().kind() == BaseFormula::Kind::Not);
  }
}

TEST_CASE("model JSON round trip") {
  FiniteModel m = validate_model(p_model_json());
  FiniteModel again = validate_model(m.to_json());
  CHECK(m == again);
}
