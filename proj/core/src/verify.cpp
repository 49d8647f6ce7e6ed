#include "veritas/verify.hpp"

#include <map>
#include <sstream>

#include "veritas/generators.hpp"
#include "veritas/godel.hpp"
#include "veritas/regress.hpp"
#include "veritas/text.hpp"

namespace veritas {

namespace {

void record(SuiteResult& result, std::string message) {
  if (result.failures.size() < kMaxRecordedFailures) {
    result.failures.push_back(std::move(message));
  }
}

}  // namespace

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json failure_array = nlohmann::json::array();
  for (const std::string& f : failures) failure_array.push_back(f);
  return {{"name", name}, {"checked", checked}, {"failures", failure_array}, {"pass", passed()}};
}

std::vector<LemmaConfig> random_configs(std::uint64_t rng_seed, std::size_t count) {
  Rng rng(rng_seed);
  std::vector<LemmaConfig> configs;
  configs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    FiniteModel m = random_model(rng);
    Universe u = random_universe(rng, m, 24);
    configs.push_back({std::move(m), std::move(u)});
  }
  return configs;
}

LemmaConfig worked_config() {
  FiniteModel m(Signature{}, 1, {}, {});
  Universe u = referential_closure({Sentence::t_app(702)}, m.signature());
  return {std::move(m), std::move(u)};
}

SuiteResult suite_roundtrip(std::uint64_t rng_seed, std::size_t count) {
  SuiteResult result;
  result.name = "roundtrip";
  Rng rng(rng_seed);

  struct Anchor {
    Sentence s;
    unsigned long code;
  };
  const Anchor anchors[] = {
      {Sentence::t_app(0), 1},
      {Sentence::exists_t(), 28},
      {Sentence::forall_t(), 36},
      {Sentence::base(tautology_formula()), 702},
  };
  Signature empty_sig;
  for (const Anchor& a : anchors) {
    ++result.checked;
    if (encode(a.s) != Nat(a.code)) {
      record(result, "anchor code mismatch for " + print_sentence(a.s, empty_sig));
    }
    auto back = decode(Nat(a.code), empty_sig);
    if (!back || *back != a.s) {
      record(result, "anchor decode mismatch at " + std::to_string(a.code));
    }
  }
  ++result.checked;
  if (decode(45, empty_sig)) record(result, "45 must not decode to a sentence");

  // Codes are meaningful relative to one signature (relation indices and
  // arities live there), so the injectivity sample resets with the model.
  std::map<Nat, Sentence> seen;
  FiniteModel m = random_model(rng);
  std::vector<Nat> pool;
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 200 == 0) {
      m = random_model(rng);
      pool.clear();
      seen.clear();
    }
    Sentence s = random_sentence(rng, m, rng.below(4), pool);
    ++result.checked;

    Nat code = encode(s);
    pool.push_back(code);
    auto back = decode(code, m.signature());
    if (!back || *back != s) {
      record(result, "decode(encode(s)) != s for " + print_sentence(s, m.signature()));
      continue;
    }
    std::string text = print_sentence(s, m.signature());
    try {
      Sentence reparsed = parse_sentence(text, m.signature());
      if (reparsed != s) record(result, "parse(print(s)) != s for " + text);
    } catch (const ParseError& e) {
      record(result, "parse(print(s)) failed for " + text + ": " + e.what());
    }
    auto [it, fresh] = seen.emplace(code, s);
    if (!fresh && !(it->second == s)) {
      record(result, "two distinct sentences share code " + to_decimal(code));
    }
  }
  return result;
}

namespace {

struct RunContext {
  FiniteModel model;
  Universe universe;
};

RunContext random_run(Rng& rng, std::size_t max_universe) {
  FiniteModel m = random_model(rng);
  Universe u = random_universe(rng, m, max_universe);
  return {std::move(m), std::move(u)};
}

std::string describe_universe(const Universe& u) {
  std::ostringstream out;
  out << "universe{";
  bool first = true;
  for (const auto& [code, s] : u.members()) {
    if (!first) out << ",";
    first = false;
    out << to_decimal(code);
  }
  out << "}";
  return out.str();
}

}  // namespace

SuiteResult suite_consistency(std::uint64_t rng_seed, std::size_t runs) {
  SuiteResult result;
  result.name = "consistency";
  Rng rng(rng_seed);
  for (std::size_t run = 0; run < runs; ++run) {
    RunContext ctx = random_run(rng, 12);
    SymbolicCodeSet u = random_consistent_subset(rng, ctx.universe, ctx.model);
    ++result.checked;
    SymbolicCodeSet next = step(u, ctx.model, ctx.universe);
    if (!is_consistent(next, ctx.model)) {
      record(result, "step of a consistent set is inconsistent: " + describe_universe(ctx.universe));
    }
    for (const auto& [code, s] : ctx.universe.members()) {
      RuleVerdict v = evaluate_rules(s, u, ctx.model);
      if (v.in_g && v.in_f) {
        record(result, "sentence in both G and F: " + print_sentence(s, ctx.model.signature()));
      }
    }
  }
  return result;
}

SuiteResult suite_monotonicity(std::uint64_t rng_seed, std::size_t runs) {
  SuiteResult result;
  result.name = "monotonicity";
  Rng rng(rng_seed);
  for (std::size_t run = 0; run < runs; ++run) {
    RunContext ctx = random_run(rng, 12);
    SymbolicCodeSet v = random_consistent_subset(rng, ctx.universe, ctx.model);
    // Thin v down to a subset; dropping codes or the flag preserves
    // consistency.
    SymbolicCodeSet u;
    u.set_contains_all_true_base(v.contains_all_true_base() && rng.chance(2, 3));
    for (const Nat& code : v.explicit_codes()) {
      if (rng.chance(2, 3)) u.insert(code);
    }
    ++result.checked;
    if (!u.subset_of(v, ctx.model)) {
      record(result, "generator produced a non-subset");
      continue;
    }
    SymbolicCodeSet su = step(u, ctx.model, ctx.universe);
    SymbolicCodeSet sv = step(v, ctx.model, ctx.universe);
    if (!su.subset_of(sv, ctx.model)) {
      record(result, "step is not monotone on " + describe_universe(ctx.universe));
    }
  }
  return result;
}

SuiteResult suite_chain_unions(std::uint64_t rng_seed, std::size_t runs) {
  SuiteResult result;
  result.name = "chain-unions";
  Rng rng(rng_seed);
  for (std::size_t run = 0; run < runs; ++run) {
    RunContext ctx = random_run(rng, 12);
    FixpointResult fp = least_fixed_point(ctx.universe, ctx.model);
    std::vector<SymbolicCodeSet> chain;
    for (const auto& stage : fp.trace.stages) {
      chain.push_back(stage.set);
      ++result.checked;
      if (!check_chain_union(chain, ctx.model)) {
        record(result, "stage prefix union inconsistent on " + describe_universe(ctx.universe));
      }
    }
  }
  return result;
}

SuiteResult suite_fixed_point(std::uint64_t rng_seed, std::size_t runs) {
  SuiteResult result;
  result.name = "fixed-point";
  Rng rng(rng_seed);
  for (std::size_t run = 0; run < runs; ++run) {
    // Half the runs stay at most four sentences so the exhaustive least-ness
    // search below applies.
    RunContext ctx = random_run(rng, run % 2 == 0 ? 4 : 12);
    ++result.checked;
    FixpointResult fp = least_fixed_point(ctx.universe, ctx.model);

    if (fp.trace.stabilized_at > ctx.universe.size() + 1) {
      record(result, "stabilization bound exceeded on " + describe_universe(ctx.universe));
    }
    if (!(step(fp.set, ctx.model, ctx.universe) == fp.set)) {
      record(result, "result is not a fixed point on " + describe_universe(ctx.universe));
    }
    for (std::size_t i = 0; i + 1 < fp.trace.stages.size(); ++i) {
      const auto& a = fp.trace.stages[i].set;
      const auto& b = fp.trace.stages[i + 1].set;
      if (!a.subset_of(b, ctx.model) || a == b) {
        record(result, "stages not strictly increasing on " + describe_universe(ctx.universe));
      }
      if (!a.subset_of(step(a, ctx.model, ctx.universe), ctx.model)) {
        record(result, "stage not below its step on " + describe_universe(ctx.universe));
      }
    }

    if (ctx.universe.size() > 4) continue;
    // Exhaustive least-ness: every consistent fixed point of step contains
    // the computed one.
    std::vector<Nat> codes;
    for (const auto& [code, s] : ctx.universe.members()) codes.push_back(code);
    for (std::size_t mask = 0; mask < (std::size_t{1} << codes.size()); ++mask) {
      for (bool flag : {false, true}) {
        SymbolicCodeSet candidate;
        candidate.set_contains_all_true_base(flag);
        for (std::size_t bit = 0; bit < codes.size(); ++bit) {
          if (mask & (std::size_t{1} << bit)) candidate.insert(codes[bit]);
        }
        if (!is_consistent(candidate, ctx.model)) continue;
        if (!(step(candidate, ctx.model, ctx.universe) == candidate)) continue;
        if (!fp.set.subset_of(candidate, ctx.model)) {
          record(result, "computed fixed point is not least on " + describe_universe(ctx.universe));
        }
      }
    }
  }
  return result;
}

SuiteResult suite_biconditionals(const std::vector<LemmaConfig>& configs) {
  SuiteResult result;
  result.name = "biconditionals";
  for (const LemmaConfig& config : configs) {
    FixpointResult fp = least_fixed_point(config.universe, config.model);
    VerificationReport report = verify_biconditionals(fp);
    result.checked += report.checked;
    for (const auto& f : report.failures) {
      record(result, f.sentence + ": expected " + f.expected + ", got " + f.got);
    }
  }
  return result;
}

SuiteResult suite_base_agreement(const std::vector<LemmaConfig>& configs) {
  SuiteResult result;
  result.name = "base-agreement";
  for (const LemmaConfig& config : configs) {
    FixpointResult fp = least_fixed_point(config.universe, config.model);
    VerificationReport report = verify_base_agreement(fp);
    result.checked += report.checked;
    for (const auto& f : report.failures) {
      record(result, f.sentence + ": expected " + f.expected + ", got " + f.got);
    }
  }
  return result;
}

SuiteResult suite_evaluator_agreement(const std::vector<LemmaConfig>& configs) {
  SuiteResult result;
  result.name = "evaluator-agreement";
  for (const LemmaConfig& config : configs) {
    FixpointResult fp = least_fixed_point(config.universe, config.model);
    for (const auto& [code, s] : config.universe.members()) {
      ++result.checked;
      Valuation stagewise = valuation(s, fp);
      Valuation grounded = classify_grounded(s, config.model);
      if (stagewise != grounded) {
        record(result, print_sentence(s, config.model.signature()) + ": valuation " +
                           to_string(stagewise) + " vs grounded " + to_string(grounded));
      }
    }
  }
  return result;
}

SuiteResult suite_truth_tables(std::uint64_t rng_seed, const std::vector<LemmaConfig>& configs) {
  SuiteResult result;
  result.name = "truth-tables";

  // Base level: the five connectives and quantifier duality.
  Rng rng(rng_seed);
  for (std::size_t run = 0; run < 500; ++run) {
    FiniteModel m = random_model(rng);
    BaseFormula a = random_base_sentence(rng, m, 2);
    BaseFormula b = random_base_sentence(rng, m, 2);
    bool ea = eval_base(m, a);
    bool eb = eval_base(m, b);
    ++result.checked;
    bool ok = eval_base(m, BaseFormula::negation(a)) == !ea &&
              eval_base(m, BaseFormula::disjunction(a, b)) == (ea || eb) &&
              eval_base(m, BaseFormula::conjunction(a, b)) == (ea && eb) &&
              eval_base(m, BaseFormula::implication(a, b)) == (!ea || eb) &&
              eval_base(m, BaseFormula::biconditional(a, b)) == (ea == eb);
    if (!ok) record(result, "base truth table violated: " + print_base_formula(a, m.signature()));
    BaseFormula quantified = random_base_sentence(rng, m, 2);
    BaseFormula left = BaseFormula::negation(BaseFormula::forall(50, quantified));
    BaseFormula right = BaseFormula::exists(50, BaseFormula::negation(quantified));
    if (eval_base(m, left) != eval_base(m, right)) {
      record(result, "quantifier duality violated: " + print_base_formula(quantified, m.signature()));
    }
  }

  // Inside the fixed-point language: classical tables between determinate
  // sentences.
  for (const LemmaConfig& config : configs) {
    FixpointResult fp = least_fixed_point(config.universe, config.model);
    std::vector<Sentence> determinate;
    std::vector<bool> values;
    for (const auto& [code, s] : config.universe.members()) {
      Valuation v = valuation(s, fp);
      if (v == Valuation::Undetermined) continue;
      determinate.push_back(s);
      values.push_back(v == Valuation::True);
    }
    for (std::size_t i = 0; i < determinate.size(); ++i) {
      for (std::size_t j = 0; j < determinate.size(); ++j) {
        ++result.checked;
        bool a = values[i], b = values[j];
        const Sentence &sa = determinate[i], &sb = determinate[j];
        auto expect = [&](const Sentence& s, bool truth) {
          Valuation got = valuation(s, fp);
          Valuation want = truth ? Valuation::True : Valuation::False;
          if (got != want) {
            record(result, print_sentence(s, config.model.signature()) + ": expected " +
                               to_string(want) + ", got " + to_string(got));
          }
        };
        expect(Sentence::negation(sa), !a);
        expect(Sentence::disjunction(sa, sb), a || b);
        expect(Sentence::conjunction(sa, sb), a && b);
        expect(Sentence::implication(sa, sb), !a || b);
        expect(Sentence::biconditional(sa, sb), a == b);
      }
    }
  }
  return result;
}

SuiteResult suite_quantified_t(const std::vector<LemmaConfig>& configs) {
  SuiteResult result;
  result.name = "quantified-t";
  for (const LemmaConfig& config : configs) {
    // Extend the universe so it contains both quantified T-atoms.
    std::vector<Sentence> seeds = {Sentence::exists_t(), Sentence::forall_t()};
    for (const auto& [code, s] : config.universe.members()) seeds.push_back(s);
    Universe extended = referential_closure(seeds, config.model.signature());
    FixpointResult fp = least_fixed_point(extended, config.model);
    ++result.checked;
    if (valuation(Sentence::exists_t(), fp) != Valuation::True) {
      record(result, "exists x. T(x) did not valuate True");
    }
    if (valuation(Sentence::forall_t(), fp) != Valuation::False) {
      record(result, "forall x. T(x) did not valuate False");
    }
    // Rule-expansion witnesses. G-side: some numeral n with T(n) in G; the
    // fixed point is nonempty, so a witness exists among explicit codes or
    // the canonical true base code.
    Nat witness = fp.set.explicit_codes().empty()
                      ? encode(Sentence::base(tautology_formula()))
                      : *fp.set.explicit_codes().begin();
    if (!in_G(Sentence::t_app(witness), fp.set, config.model)) {
      record(result, "no G witness for exists x. T(x)");
    }
    // F-side: some numeral n with T(n) in F. The referent below is a false
    // base sentence whose base-level negation is flag-implied.
    Nat false_code = encode(Sentence::base(
        BaseFormula::exists(0, BaseFormula::negation(
                                   BaseFormula::equal(Term::variable(0), Term::variable(0))))));
    if (!in_F(Sentence::t_app(false_code), fp.set, config.model)) {
      record(result, "no F witness for forall x. T(x)");
    }
    // Non-coding numerals block the universal readings: T(45) never gets a
    // verdict.
    RuleVerdict non_coding = evaluate_rules(Sentence::t_app(45), fp.set, config.model);
    if (non_coding.in_g || non_coding.in_f) {
      record(result, "T(45) unexpectedly received a verdict");
    }
  }
  return result;
}

SuiteResult suite_regress(std::uint64_t horizon, std::uint64_t max_natural) {
  SuiteResult result;
  result.name = "regress";
  std::uint64_t subsets = std::uint64_t{1} << (max_natural + 1);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    for (bool omega : {false, true}) {
      OmegaSet z;
      z.has_omega = omega;
      for (std::uint64_t k = 0; k <= max_natural; ++k) {
        if (mask & (std::uint64_t{1} << k)) z.naturals.insert(k);
      }
      if (!z.valid()) continue;
      ++result.checked;
      RegressReport report = analyze_regress(z, horizon);
      if (!report.pass()) {
        record(result, "regress laws failed for mask " + std::to_string(mask) +
                           (omega ? "+omega" : ""));
      }
      bool is_omega_singleton = z.naturals.empty() && z.has_omega;
      if (report.saturated != is_omega_singleton) {
        record(result, "saturation must hold exactly at Z = {omega}");
      }
    }
  }
  // Contingency of F_0: true in the omega world, false at pivot 0.
  ++result.checked;
  if (!f_truth(0, OmegaSet{{}, true}) || f_truth(0, OmegaSet{{0}, false})) {
    record(result, "F_0 is not contingent across worlds");
  }
  return result;
}

std::vector<SuiteResult> verify_all(std::uint64_t rng_seed, const VerifyOptions& options,
                                    const std::vector<LemmaConfig>& extra_configs) {
  std::vector<LemmaConfig> configs = extra_configs;
  configs.push_back(worked_config());
  std::vector<LemmaConfig> random_part = random_configs(rng_seed, options.lemma_configs);
  for (LemmaConfig& config : random_part) configs.push_back(std::move(config));

  std::vector<SuiteResult> results;
  results.push_back(suite_consistency(rng_seed, options.consistency_runs));
  results.push_back(suite_monotonicity(rng_seed + 1, options.monotonicity_runs));
  results.push_back(suite_chain_unions(rng_seed + 2, options.chain_runs));
  results.push_back(suite_biconditionals(configs));
  results.push_back(suite_base_agreement(configs));
  results.push_back(suite_evaluator_agreement(configs));
  results.push_back(suite_truth_tables(rng_seed + 3, configs));
  results.push_back(suite_regress(options.regress_horizon, options.regress_max_natural));
  return results;
}

}  // namespace veritas
