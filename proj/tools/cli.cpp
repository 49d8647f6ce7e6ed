#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "veritas/errors.hpp"
#include "veritas/fixpoint.hpp"
#include "veritas/generators.hpp"
#include "veritas/godel.hpp"
#include "veritas/model.hpp"
#include "veritas/regress.hpp"
#include "veritas/text.hpp"
#include "veritas/truth_language.hpp"
#include "veritas/universe.hpp"
#include "veritas/verify.hpp"

namespace veritas::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string model_path;
  std::vector<std::string> seeds;
  std::string seed_file;
  std::vector<std::string> seed_codes;
  std::size_t cap = kDefaultClosureCap;
  bool json = false;
  std::uint64_t rng_seed = 20250101;
  std::uint64_t horizon = 10;
  std::string z_list;
  bool z_has_omega = false;
};

void add_model_option(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--model", opts.model_path, "model description (JSON file)");
}

void add_seed_options(CLI::App* cmd, CommonOptions& opts) {
  // One value per occurrence: sentence text may be bracketed ([...]), which
  // multi-value options would otherwise expand as a comma-separated list.
  cmd->add_option("--seed", opts.seeds, "sentence in concrete syntax (repeatable)")
      ->allow_extra_args(false);
  cmd->add_option("--seed-file", opts.seed_file, "file with one sentence per line");
  cmd->add_option("--seed-code", opts.seed_codes, "sentence as a decimal code (repeatable)")
      ->allow_extra_args(false);
}

void add_json_option(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_flag("--json", opts.json, "emit JSON instead of text");
}

FiniteModel load_model(const CommonOptions& opts) {
  if (opts.model_path.empty()) {
    // One-element model over the empty signature: equality-only sentences.
    return FiniteModel(Signature{}, 1, {}, {});
  }
  std::ifstream in(opts.model_path);
  if (!in) throw InputError("cannot read model file '" + opts.model_path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in '" + opts.model_path + "': " + e.what());
  }
  return validate_model(doc);
}

std::vector<Sentence> collect_seeds(const CommonOptions& opts, const FiniteModel& m) {
  std::vector<Sentence> seeds;
  auto parse_one = [&](const std::string& text) {
    try {
      seeds.push_back(parse_sentence(text, m.signature()));
    } catch (const ParseError& e) {
      throw InputError("cannot parse '" + text + "': " + e.what());
    }
  };
  for (const std::string& text : opts.seeds) parse_one(text);
  if (!opts.seed_file.empty()) {
    std::ifstream in(opts.seed_file);
    if (!in) throw InputError("cannot read seed file '" + opts.seed_file + "'");
    std::string line;
    while (std::getline(in, line)) {
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      parse_one(line.substr(start));
    }
  }
  for (const std::string& text : opts.seed_codes) {
    auto code = nat_from_decimal(text);
    if (!code) throw InputError("'" + text + "' is not a decimal code");
    auto s = decode(*code, m.signature());
    if (!s) throw InputError("code " + text + " does not decode to a sentence");
    seeds.push_back(std::move(*s));
  }
  return seeds;
}

OmegaSet parse_omega_set(const CommonOptions& opts) {
  OmegaSet z;
  z.has_omega = opts.z_has_omega;
  std::stringstream stream(opts.z_list);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t start = item.find_first_not_of(" \t");
    std::size_t end = item.find_last_not_of(" \t");
    if (start == std::string::npos) throw InputError("empty entry in --z list");
    std::string token = item.substr(start, end - start + 1);
    auto value = nat_from_decimal(token);
    auto small = value ? to_u64(*value) : std::nullopt;
    if (!small) throw InputError("'" + token + "' is not a natural number");
    z.naturals.insert(*small);
  }
  if (!z.valid()) throw InputError("Z must be nonempty (list naturals or pass --omega)");
  return z;
}

int cmd_eval_base(const CommonOptions& opts, std::ostream& out) {
  FiniteModel m = load_model(opts);
  std::vector<Sentence> seeds = collect_seeds(opts, m);
  if (seeds.empty()) throw InputError("no sentences given");
  nlohmann::json results = nlohmann::json::array();
  for (const Sentence& s : seeds) {
    if (s.kind() != Sentence::Kind::Base) {
      throw InputError("'" + print_sentence(s, m.signature()) + "' is not a base sentence");
    }
    bool value = eval_base(m, s.base_formula());
    if (opts.json) {
      results.push_back({{"sentence", print_sentence(s, m.signature())}, {"value", value}});
    } else {
      out << print_sentence(s, m.signature()) << " : " << (value ? "true" : "false") << "\n";
    }
  }
  if (opts.json) out << nlohmann::json{{"results", results}}.dump(2) << "\n";
  return kOk;
}

int cmd_encode(const CommonOptions& opts, std::ostream& out) {
  FiniteModel m = load_model(opts);
  std::vector<Sentence> seeds = collect_seeds(opts, m);
  if (seeds.empty()) throw InputError("no sentences given");
  nlohmann::json results = nlohmann::json::array();
  for (const Sentence& s : seeds) {
    Nat code = encode(s);
    if (opts.json) {
      results.push_back(
          {{"sentence", print_sentence(s, m.signature())}, {"code", to_decimal(code)}});
    } else {
      out << print_sentence(s, m.signature()) << " : " << to_decimal(code) << "\n";
    }
  }
  if (opts.json) out << nlohmann::json{{"results", results}}.dump(2) << "\n";
  return kOk;
}

int cmd_decode(const CommonOptions& opts, std::ostream& out) {
  FiniteModel m = load_model(opts);
  if (opts.seed_codes.empty()) throw InputError("no codes given (use --seed-code)");
  nlohmann::json results = nlohmann::json::array();
  for (const std::string& text : opts.seed_codes) {
    auto code = nat_from_decimal(text);
    if (!code) throw InputError("'" + text + "' is not a decimal code");
    auto s = decode(*code, m.signature());
    if (opts.json) {
      results.push_back({{"code", text},
                         {"sentence", s ? nlohmann::json(print_sentence(*s, m.signature()))
                                        : nlohmann::json(nullptr)}});
    } else {
      out << text << " : " << (s ? print_sentence(*s, m.signature()) : "not-a-sentence") << "\n";
    }
  }
  if (opts.json) out << nlohmann::json{{"results", results}}.dump(2) << "\n";
  return kOk;
}

int cmd_lfp(const CommonOptions& opts, std::ostream& out) {
  FiniteModel m = load_model(opts);
  std::vector<Sentence> seeds = collect_seeds(opts, m);
  Universe universe = referential_closure(seeds, m.signature(), opts.cap);
  FixpointResult fp = least_fixed_point(universe, m);
  if (opts.json) {
    nlohmann::json universe_json = nlohmann::json::array();
    for (const auto& [code, s] : universe.members()) {
      universe_json.push_back(
          {{"code", to_decimal(code)}, {"text", print_sentence(s, m.signature())}});
    }
    nlohmann::json doc = fp.trace.to_json();
    doc["universe"] = universe_json;
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "universe: " << universe.size() << " sentence(s)\n";
  for (const auto& [code, s] : universe.members()) {
    out << "  " << to_decimal(code) << " = " << print_sentence(s, m.signature()) << "\n";
  }
  for (const auto& stage : fp.trace.stages) {
    out << "stage " << stage.index << ": explicit {";
    bool first = true;
    for (const Nat& code : stage.set.explicit_codes()) {
      if (!first) out << ", ";
      first = false;
      out << to_decimal(code);
    }
    out << "} flag " << (stage.set.contains_all_true_base() ? "on" : "off") << "\n";
  }
  out << "stabilized_at: " << fp.trace.stabilized_at << "\n";
  return kOk;
}

int cmd_eval(const CommonOptions& opts, std::ostream& out) {
  FiniteModel m = load_model(opts);
  std::vector<Sentence> seeds = collect_seeds(opts, m);
  if (seeds.empty()) throw InputError("no sentences given");
  nlohmann::json results = nlohmann::json::array();
  for (const Sentence& s : seeds) {
    Valuation v = classify_grounded(s, m);
    const char* text = v == Valuation::Undetermined ? "ungrounded" : to_string(v);
    if (opts.json) {
      results.push_back({{"sentence", print_sentence(s, m.signature())}, {"value", text}});
    } else {
      out << print_sentence(s, m.signature()) << " : " << text << "\n";
    }
  }
  if (opts.json) out << nlohmann::json{{"results", results}}.dump(2) << "\n";
  return kOk;
}

int cmd_regress(const CommonOptions& opts, std::ostream& out) {
  OmegaSet z = parse_omega_set(opts);
  if (opts.horizon < 2) throw InputError("horizon must be at least 2");
  RegressReport report = analyze_regress(z, opts.horizon);
  if (opts.json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << "Z = {";
    bool first = true;
    for (std::uint64_t n : z.naturals) {
      if (!first) out << ", ";
      first = false;
      out << n;
    }
    if (z.has_omega) out << (first ? "omega" : ", omega");
    out << "}\n";
    out << "pivot: " << (report.pivot ? std::to_string(*report.pivot) : "omega") << "\n";
    out << "F_i truth:";
    for (std::size_t i = 0; i < report.f_truths.size(); ++i) {
      out << " F" << i << "=" << (report.f_truths[i] ? "T" : "F");
    }
    out << "\n";
    out << "condition (i) entailment chain: " << (report.cond_entails_chain ? "holds" : "fails")
        << "\n";
    out << "condition (ii) no reverse entailment: "
        << (report.cond_no_entail_next ? "holds" : "fails") << "\n";
    out << "condition (iii) no reverse justification: "
        << (report.cond_no_justify_next ? "holds" : "fails") << "\n";
    out << "condition (iv) justification-saturated: " << (report.saturated ? "yes" : "no")
        << "\n";
    out << "F_0 justified: " << (report.f0_justified ? "yes" : "no") << "\n";
    out << "lemma checks: " << (report.pass() ? "pass" : "FAIL") << "\n";
  }
  return report.pass() ? kOk : kVerificationFailure;
}

int cmd_verify(const std::string& suite, const CommonOptions& opts, std::ostream& out) {
  VerifyOptions options;
  std::vector<LemmaConfig> extra;
  if (!opts.model_path.empty() || !opts.seeds.empty() || !opts.seed_file.empty() ||
      !opts.seed_codes.empty()) {
    FiniteModel m = load_model(opts);
    std::vector<Sentence> seeds = collect_seeds(opts, m);
    Universe universe = referential_closure(seeds, m.signature(), opts.cap);
    extra.push_back({std::move(m), std::move(universe)});
  }

  auto configs = [&]() {
    std::vector<LemmaConfig> all = extra;
    all.push_back(worked_config());
    for (LemmaConfig& config : random_configs(opts.rng_seed, options.lemma_configs)) {
      all.push_back(std::move(config));
    }
    return all;
  };

  std::vector<SuiteResult> results;
  if (suite == "consistency") {
    results.push_back(suite_consistency(opts.rng_seed, options.consistency_runs));
  } else if (suite == "monotone") {
    results.push_back(suite_monotonicity(opts.rng_seed, options.monotonicity_runs));
  } else if (suite == "chain") {
    results.push_back(suite_chain_unions(opts.rng_seed, options.chain_runs));
  } else if (suite == "biconditional") {
    results.push_back(suite_biconditionals(configs()));
  } else if (suite == "agreement") {
    auto shared = configs();
    results.push_back(suite_base_agreement(shared));
    results.push_back(suite_evaluator_agreement(shared));
  } else if (suite == "tables") {
    results.push_back(suite_truth_tables(opts.rng_seed, configs()));
  } else if (suite == "regress") {
    results.push_back(suite_regress(options.regress_horizon, options.regress_max_natural));
  } else if (suite == "all") {
    results = verify_all(opts.rng_seed, options, extra);
  } else {
    throw InputError("unknown verify suite '" + suite +
                     "' (expected consistency|monotone|chain|biconditional|agreement|tables|"
                     "regress|all)");
  }

  bool all_pass = true;
  nlohmann::json doc = nlohmann::json::array();
  for (const SuiteResult& result : results) {
    all_pass = all_pass && result.passed();
    if (opts.json) {
      doc.push_back(result.to_json());
    } else {
      out << result.name << ": " << (result.passed() ? "PASS" : "FAIL") << " (" << result.checked
          << " checks)\n";
      for (const std::string& failure : result.failures) {
        out << "  failure: " << failure << "\n";
      }
    }
  }
  if (opts.json) out << doc.dump(2) << "\n";
  return all_pass ? kOk : kVerificationFailure;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"truth-predicate semantics workbench"};
  app.require_subcommand(1);
  CommonOptions opts;

  CLI::App* eval_base_cmd = app.add_subcommand("eval-base", "evaluate base sentences in the model");
  add_model_option(eval_base_cmd, opts);
  add_seed_options(eval_base_cmd, opts);
  add_json_option(eval_base_cmd, opts);

  CLI::App* encode_cmd = app.add_subcommand("encode", "print sentence codes");
  add_model_option(encode_cmd, opts);
  add_seed_options(encode_cmd, opts);
  add_json_option(encode_cmd, opts);

  CLI::App* decode_cmd = app.add_subcommand("decode", "decode codes to sentences");
  add_model_option(decode_cmd, opts);
  decode_cmd->add_option("--seed-code", opts.seed_codes, "code to decode (repeatable)");
  add_json_option(decode_cmd, opts);

  CLI::App* lfp_cmd = app.add_subcommand("lfp", "iterate to the least consistent fixed point");
  add_model_option(lfp_cmd, opts);
  add_seed_options(lfp_cmd, opts);
  add_json_option(lfp_cmd, opts);
  lfp_cmd->add_option("--cap", opts.cap, "closure size cap");

  CLI::App* eval_cmd = app.add_subcommand("eval", "grounded classification of sentences");
  add_model_option(eval_cmd, opts);
  add_seed_options(eval_cmd, opts);
  add_json_option(eval_cmd, opts);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
  std::string suite;
  verify_cmd
      ->add_option("suite", suite,
                   "consistency|monotone|chain|biconditional|agreement|tables|regress|all")
      ->required();
  add_model_option(verify_cmd, opts);
  add_seed_options(verify_cmd, opts);
  add_json_option(verify_cmd, opts);
  verify_cmd->add_option("--cap", opts.cap, "closure size cap");
  verify_cmd->add_option("--rng-seed", opts.rng_seed, "seed for the property suites");

  CLI::App* regress_cmd = app.add_subcommand("regress", "analyze the justification regress");
  regress_cmd->add_option("--z", opts.z_list, "comma-separated naturals of Z");
  regress_cmd->add_flag("--omega", opts.z_has_omega, "omega is a member of Z");
  regress_cmd->add_option("--horizon", opts.horizon, "check indices 0..N (default 10)");
  add_json_option(regress_cmd, opts);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (eval_base_cmd->parsed()) return cmd_eval_base(opts, out);
    if (encode_cmd->parsed()) return cmd_encode(opts, out);
    if (decode_cmd->parsed()) return cmd_decode(opts, out);
    if (lfp_cmd->parsed()) return cmd_lfp(opts, out);
    if (eval_cmd->parsed()) return cmd_eval(opts, out);
    if (verify_cmd->parsed()) return cmd_verify(suite, opts, out);
    if (regress_cmd->parsed()) return cmd_regress(opts, out);
    err << "error: no subcommand\n";
    return kUsageError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ClosureCapError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace veritas::cli
