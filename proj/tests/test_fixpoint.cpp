#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rule_oracle.hpp"
#include "veritas/fixpoint.hpp"
#include "veritas/generators.hpp"
#include "veritas/godel.hpp"

using namespace veritas;

namespace {

Sentence taut() { return Sentence::base(tautology_formula()); }

FiniteModel trivial_model() { return FiniteModel(Signature{}, 1, {}, {}); }

SymbolicCodeSet set_of(std::initializer_list<Nat> codes, bool flag = false) {
  SymbolicCodeSet u;
  for (const Nat& c : codes) u.insert(c);
  u.set_contains_all_true_base(flag);
  return u;
}

Universe worked_universe() {
  return referential_closure({Sentence::t_app(702)}, Signature{});
}

}  // namespace

TEST_CASE("is_consistent") {
  FiniteModel m = trivial_model();
  CHECK(is_consistent(set_of({}), m));
  CHECK(is_consistent(set_of({}, true), m));
  CHECK(is_consistent(set_of({702}, true), m));

  Nat not_code = encode(Sentence::negation(taut()));
  CHECK(!is_consistent(set_of({702, not_code}), m));
  // The flag brings in 702 on its own.
  CHECK(!is_consistent(set_of({not_code}, true), m));
  // Base-level negation counts as a negation too.
  Nat base_neg = encode(Sentence::base(BaseFormula::negation(tautology_formula())));
  CHECK(!is_consistent(set_of({702, base_neg}), m));
  CHECK(!is_consistent(set_of({base_neg}, true), m));

  CHECK_THROWS_AS(is_consistent(set_of({45}), m), std::invalid_argument);
}

TEST_CASE("is_sound") {
  FiniteModel m = trivial_model();
  Universe u = worked_universe();
  CHECK(is_sound(set_of({}), m, u));
  CHECK(is_sound(set_of({702}), m, u));
  CHECK(!is_sound(set_of({encode(Sentence::t_app(702))}), m, u));
}

TEST_CASE("step on the worked universe") {
  FiniteModel m = trivial_model();
  Universe u = worked_universe();

  SymbolicCodeSet first = step(set_of({}), m, u);
  CHECK(first.explicit_codes() == std::set<Nat>{702});
  CHECK(first.contains_all_true_base());

  SymbolicCodeSet second = step(first, m, u);
  CHECK(second.explicit_codes() == std::set<Nat>{702, 248158});
  CHECK(second.contains_all_true_base());

  CHECK(step(second, m, u) == second);  // fixed point
}

TEST_CASE("least_fixed_point on the worked universe") {
  FiniteModel m = trivial_model();
  FixpointResult fp = least_fixed_point(worked_universe(), m);
  CHECK(fp.trace.stabilized_at == 2);
  CHECK(fp.set.explicit_codes() == std::set<Nat>{702, 248158});
  CHECK(fp.set.contains_all_true_base());
  REQUIRE(fp.trace.stages.size() == 3);
  CHECK(fp.trace.stages[0].set.explicit_codes().empty());
  CHECK(!fp.trace.stages[0].set.contains_all_true_base());
  CHECK(fp.trace.stages[1].set.explicit_codes() == std::set<Nat>{702});
  CHECK(fp.trace.stages[2].added == std::vector<Nat>{248158});

  nlohmann::json doc = fp.trace.to_json();
  CHECK(doc["stabilized_at"] == 2);
  CHECK(doc["stages"].size() == 3);
  CHECK(doc["stages"][1]["explicit"][0] == "702");
}

TEST_CASE("least_fixed_point with the quantified T-atoms") {
  FiniteModel m = trivial_model();
  Universe u =
      referential_closure({Sentence::exists_t(), Sentence::forall_t(), taut()}, Signature{});
  FixpointResult fp = least_fixed_point(u, m);
  // exists x. T(x) enters at stage 2 (the set turns nonempty at stage 1).
  CHECK(fp.set.contains(encode(Sentence::exists_t()), m));
  CHECK(!fp.trace.stages[1].set.contains(encode(Sentence::exists_t()), m));
  CHECK(!fp.set.contains(encode(Sentence::forall_t()), m));
  CHECK(in_F(Sentence::forall_t(), fp.set, m));
  CHECK(fp.trace.stabilized_at == 2);
}

TEST_CASE("least_fixed_point on the empty universe stabilizes at stage 1") {
  FiniteModel m = trivial_model();
  Universe u = referential_closure({}, Signature{});
  FixpointResult fp = least_fixed_point(u, m);
  CHECK(fp.trace.stabilized_at == 1);
  CHECK(fp.set.explicit_codes().empty());
  CHECK(fp.set.contains_all_true_base());
}

TEST_CASE("least_fixed_point_above accepts sound seeds and rejects others") {
  FiniteModel m = trivial_model();
  Universe u = worked_universe();
  FixpointResult fp = least_fixed_point_above(set_of({702}), u, m);
  CHECK(fp.set.explicit_codes() == std::set<Nat>{702, 248158});
  CHECK_THROWS_AS(least_fixed_point_above(set_of({encode(Sentence::t_app(702))}), u, m),
                  std::invalid_argument);
}

TEST_CASE("check_chain_union") {
  FiniteModel m = trivial_model();
  CHECK(check_chain_union({set_of({}), set_of({702})}, m));

  FixpointResult fp = least_fixed_point(worked_universe(), m);
  std::vector<SymbolicCodeSet> prefix;
  for (const auto& stage : fp.trace.stages) {
    prefix.push_back(stage.set);
    CHECK(check_chain_union(prefix, m));
  }

  Nat not_code = encode(Sentence::negation(taut()));
  CHECK_THROWS_AS(check_chain_union({set_of({702}), set_of({not_code})}, m),
                  std::invalid_argument);
}

TEST_CASE("random universes: monotonicity, consistency preservation, bounds") {
  Rng rng(37);
  for (int run = 0; run < 200; ++run) {
    FiniteModel m = random_model(rng);
    Universe u = random_universe(rng, m, 12);

    SymbolicCodeSet big = random_consistent_subset(rng, u, m);
    SymbolicCodeSet small;
    small.set_contains_all_true_base(big.contains_all_true_base() && rng.chance(1, 2));
    for (const Nat& code : big.explicit_codes()) {
      if (rng.chance(1, 2)) small.insert(code);
    }
    CHECK(step(small, m, u).subset_of(step(big, m, u), m));
    CHECK(is_consistent(step(big, m, u), m));

    FixpointResult fp = least_fixed_point(u, m);
    CHECK(fp.trace.stabilized_at <= u.size() + 1);
    CHECK(is_consistent(fp.set, m));
    CHECK(is_sound(fp.set, m, u));
    for (std::size_t i = 0; i + 1 < fp.trace.stages.size(); ++i) {
      const SymbolicCodeSet& stage = fp.trace.stages[i].set;
      const SymbolicCodeSet& next = fp.trace.stages[i + 1].set;
      CHECK(stage.subset_of(next, m));
      CHECK(!(stage == next));
      CHECK(stage.subset_of(step(stage, m, u), m));
    }
  }
}

TEST_CASE("engine fixed point equals the naive oracle's") {
  Rng rng(41);
  for (int run = 0; run < 120; ++run) {
    FiniteModel m = random_model(rng);
    Universe u = random_universe(rng, m, 10);
    FixpointResult fp = least_fixed_point(u, m);
    oracle::Stage naive = oracle::naive_lfp(m, u);
    CHECK(naive.codes == fp.set.explicit_codes());
    CHECK(naive.all_true_base == fp.set.contains_all_true_base());
  }
}

TEST_CASE("exhaustive least-ness on small universes") {
  Rng rng(43);
  int small_universes = 0;
  for (int run = 0; run < 200 && small_universes < 60; ++run) {
    FiniteModel m = random_model(rng);
    Universe u = random_universe(rng, m, 4);
    if (u.size() > 4) continue;
    ++small_universes;
    FixpointResult fp = least_fixed_point(u, m);

    std::vector<Nat> codes;
    for (const auto& [code, s] : u.members()) codes.push_back(code);
    for (std::size_t mask = 0; mask < (std::size_t{1} << codes.size()); ++mask) {
      for (bool flag : {false, true}) {
        SymbolicCodeSet candidate;
        candidate.set_contains_all_true_base(flag);
        for (std::size_t bit = 0; bit < codes.size(); ++bit) {
          if (mask & (std::size_t{1} << bit)) candidate.insert(codes[bit]);
        }
        if (!is_consistent(candidate, m)) continue;
        if (!(step(candidate, m, u) == candidate)) continue;
        CHECK(fp.set.subset_of(candidate, m));
      }
    }
  }
  CHECK(small_universes >= 30);
}
