#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = veritas::cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

// Temp file helper; removed on destruction.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& contents)
      : path("veritas_test_" + name) {
    std::ofstream f(path);
    f << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const char* kModelJson = R"({
  "domain_size": 2,
  "relations": { "P": { "arity": 1, "tuples": [[0]] } },
  "constants": { "c": 1 }
})";

}  // namespace

TEST_CASE("lfp on the worked seed") {
  RunResult r = run({"lfp", "--seed", "T(702)", "--json"});
  CHECK(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["stabilized_at"] == 2);
  CHECK(doc["stages"].size() == 3);
  std::vector<std::string> final_codes = doc["stages"][2]["explicit"];
  CHECK(final_codes == std::vector<std::string>{"702", "248158"});
  CHECK(doc["universe"].size() == 2);
}

TEST_CASE("encode/decode round trip through the CLI") {
  RunResult enc = run({"encode", "--seed", "T(0)", "--seed", "exists x. T(x)"});
  CHECK(enc.code == 0);
  CHECK(enc.out == "T(0) : 1\nexists x. T(x) : 28\n");

  RunResult dec = run({"decode", "--seed-code", "1", "--seed-code", "45"});
  CHECK(dec.code == 0);
  CHECK(dec.out == "1 : T(0)\n45 : not-a-sentence\n");
}

TEST_CASE("eval-base against a model file") {
  TempFile model("m.json", kModelJson);
  RunResult r = run({"eval-base", "--model", model.path, "--seed", "[forall v0. P(v0)]",
                     "--seed", "[P(c)]", "--seed", "[exists v0. P(v0)]"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "[forall v0. P(v0)] : false\n[P(c)] : false\n[exists v0. P(v0)] : true\n");

  // Bracketed sentences with commas must arrive at the parser verbatim.
  TempFile pair_model("pair.json", R"({
    "domain_size": 2,
    "relations": { "E": { "arity": 2, "tuples": [[0,0],[1,1]] } },
    "constants": {}
  })");
  RunResult pairs =
      run({"eval-base", "--model", pair_model.path, "--seed", "[forall v0. E(v0, v0)]"});
  CHECK(pairs.code == 0);
  CHECK(pairs.out == "[forall v0. E(v0, v0)] : true\n");

  RunResult bad = run({"eval-base", "--model", model.path, "--seed", "T(0)"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("not a base sentence") != std::string::npos);
}

TEST_CASE("grounded evaluation") {
  RunResult r = run({"eval", "--seed", "T(248158)", "--seed", "T(45)", "--seed",
                     "forall x. T(x)"});
  CHECK(r.code == 0);
  CHECK(r.out == "T(248158) : true\nT(45) : ungrounded\nforall x. T(x) : false\n");
}

TEST_CASE("seed files and seed codes combine") {
  TempFile seeds("seeds.txt", "# worked example\nT(702)\n\n[forall v0. v0 = v0]\n");
  RunResult r = run({"lfp", "--seed-file", seeds.path, "--seed-code", "28", "--json"});
  CHECK(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["universe"].size() == 3);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"regress"}).code == 2);  // Z empty
  {
    RunResult r = run({"regress", "--z", ""});
    CHECK(r.code == 2);
    CHECK(r.err.find("Z must be nonempty") != std::string::npos);
  }
  CHECK(run({"lfp", "--model", "no_such_file.json", "--seed", "T(0)"}).code == 2);
  {
    TempFile broken("broken.json", "{ not json");
    RunResult r = run({"lfp", "--model", broken.path, "--seed", "T(0)"});
    CHECK(r.code == 2);
    CHECK(r.err.find("malformed JSON") != std::string::npos);
  }
  {
    TempFile empty_domain("empty.json", R"({"domain_size": 0})");
    CHECK(run({"lfp", "--model", empty_domain.path, "--seed", "T(0)"}).code == 2);
  }
  CHECK(run({"encode", "--seed", "T(0) |"}).code == 2);       // parse error
  CHECK(run({"lfp", "--seed-code", "45"}).code == 2);         // non-coding numeral
  CHECK(run({"lfp", "--seed", "T(702)", "--cap", "1"}).code == 2);  // cap exceeded
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"regress", "--z", "1", "--horizon", "1"}).code == 2);
}

TEST_CASE("regress subcommand") {
  RunResult r = run({"regress", "--z", "3,7", "--horizon", "10", "--json"});
  CHECK(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["pivot"] == "3");
  CHECK(doc["conditions"]["justification_saturated"] == false);

  RunResult saturated = run({"regress", "--omega", "--json"});
  CHECK(saturated.code == 0);
  CHECK(nlohmann::json::parse(saturated.out)["conditions"]["justification_saturated"] == true);
}

TEST_CASE("identical configuration produces byte-identical output") {
  std::vector<std::string> args = {"lfp", "--seed", "T(702)", "--seed", "exists x. T(x)",
                                   "--json"};
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  std::vector<std::string> regress_args = {"regress", "--z", "1,4", "--omega", "--json"};
  CHECK(run(regress_args).out == run(regress_args).out);

  std::vector<std::string> verify_args = {"verify", "chain", "--rng-seed", "9", "--json"};
  CHECK(run(verify_args).out == run(verify_args).out);
}

TEST_CASE("verify subcommands pass and report") {
  RunResult chain = run({"verify", "chain", "--rng-seed", "5"});
  CHECK(chain.code == 0);
  CHECK(chain.out.find("chain-unions: PASS") != std::string::npos);

  RunResult regress = run({"verify", "regress", "--json"});
  CHECK(regress.code == 0);
  nlohmann::json doc = nlohmann::json::parse(regress.out);
  CHECK(doc.is_array());
  CHECK(doc[0]["pass"] == true);
  CHECK(doc[0]["checked"] == 256);

  // A user-provided configuration joins the lemma suites.
  TempFile model("m2.json", kModelJson);
  RunResult bicond = run({"verify", "biconditional", "--model", model.path, "--seed",
                          "T(702) & [P(c)]", "--rng-seed", "3"});
  CHECK(bicond.code == 0);

  TempFile seeds("seeds2.txt", "T(702)\n[exists v0. P(v0)] -> T(0)\n");
  RunResult all = run({"verify", "all", "--model", model.path, "--seed-file", seeds.path});
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
}
