#include "veritas/truth_language.hpp"

#include <map>

#include "veritas/godel.hpp"
#include "veritas/text.hpp"

namespace veritas {

const char* to_string(Valuation v) {
  switch (v) {
    case Valuation::True:
      return "true";
    case Valuation::False:
      return "false";
    case Valuation::Undetermined:
      return "undetermined";
  }
  return "?";
}

namespace {

// Fixed-point evaluator. Stage data answers membership for universe codes;
// codes outside the universe are resolved through U = G(U): a code belongs to
// the fixed point exactly when its sentence is in G of it.
class FixpointEvaluator {
 public:
  explicit FixpointEvaluator(const FixpointResult& fp) : fp_(fp) {}

  RuleVerdict evaluate(const Sentence& s) {
    using Kind = Sentence::Kind;
    switch (s.kind()) {
      case Kind::Base: {
        bool value = eval_base(fp_.model, s.base_formula());
        return {value, !value};
      }
      case Kind::TApp: {
        auto referent = decode(s.t_arg(), fp_.model.signature());
        if (!referent) return {false, false};
        bool g = member(s.t_arg());
        bool f = false;
        for (const Nat& neg : negation_codes(*referent)) {
          if (member(neg)) {
            f = true;
            break;
          }
        }
        return {g, f};
      }
      case Kind::Not: {
        RuleVerdict inner = evaluate(s.child());
        return {inner.in_f, inner.in_g};
      }
      case Kind::Or: {
        RuleVerdict a = evaluate(s.left());
        RuleVerdict b = evaluate(s.right());
        return {a.in_g || b.in_g, a.in_f && b.in_f};
      }
      case Kind::And: {
        RuleVerdict a = evaluate(s.left());
        RuleVerdict b = evaluate(s.right());
        return {a.in_g && b.in_g, a.in_f || b.in_f};
      }
      case Kind::Imp: {
        RuleVerdict a = evaluate(s.left());
        RuleVerdict b = evaluate(s.right());
        return {a.in_f || b.in_g, a.in_g && b.in_f};
      }
      case Kind::Iff: {
        RuleVerdict a = evaluate(s.left());
        RuleVerdict b = evaluate(s.right());
        return {(a.in_g && b.in_g) || (a.in_f && b.in_f),
                (a.in_g && b.in_f) || (a.in_f && b.in_g)};
      }
      case Kind::ExistsT:
        return {!fp_.set.denotes_empty(), false};
      case Kind::ForallT: {
        if (fp_.set.contains_all_true_base()) return {false, true};
        for (const Nat& code : fp_.set.explicit_codes()) {
          auto s2 = decode(code, fp_.model.signature());
          if (s2 && is_negation_rooted(*s2)) return {false, true};
        }
        return {false, false};
      }
    }
    return {false, false};
  }

 private:
  // Stage data is a sound under-approximation of the fixed point (the
  // explicit part only records universe codes); anything it misses is
  // resolved by the recursion. Terminates: every T-application argument is
  // strictly smaller than the code of the sentence containing it.
  bool member(const Nat& code) {
    if (fp_.set.contains(code, fp_.model)) return true;
    auto it = member_cache_.find(code);
    if (it != member_cache_.end()) return it->second;
    auto s = decode(code, fp_.model.signature());
    bool result = s && evaluate(*s).in_g;
    member_cache_.emplace(code, result);
    return result;
  }

  const FixpointResult& fp_;
  std::map<Nat, bool> member_cache_;
};

void collect_missing_references(const Sentence& s, const FixpointResult& fp,
                                std::vector<std::string>& missing) {
  if (s.kind() == Sentence::Kind::TApp) {
    auto referent = decode(s.t_arg(), fp.model.signature());
    if (referent && !fp.universe.contains_code(s.t_arg())) {
      missing.push_back(print_sentence(*referent, fp.model.signature()));
    }
    return;
  }
  for (const Sentence& sub : s.immediate_subsentences()) {
    collect_missing_references(sub, fp, missing);
  }
}

}  // namespace

Valuation valuation(const Sentence& s, const FixpointResult& fp) {
  std::vector<std::string> missing;
  collect_missing_references(s, fp, missing);
  if (!missing.empty()) {
    std::string message = "sentence references codes outside the universe:";
    for (const std::string& text : missing) message += " " + text;
    throw MissingReferenceError(std::move(message), std::move(missing));
  }
  RuleVerdict v = FixpointEvaluator(fp).evaluate(s);
  if (v.in_g) return Valuation::True;
  if (v.in_f) return Valuation::False;
  return Valuation::Undetermined;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json failure_array = nlohmann::json::array();
  for (const Failure& f : failures) {
    failure_array.push_back({{"sentence", f.sentence}, {"expected", f.expected}, {"got", f.got}});
  }
  return {{"checked", checked}, {"failures", failure_array}, {"pass", pass()}};
}

VerificationReport verify_biconditionals(const FixpointResult& fp) {
  VerificationReport report;
  const Signature& sig = fp.model.signature();
  for (const auto& [code, s] : fp.universe.members()) {
    if (valuation(s, fp) == Valuation::Undetermined) continue;
    ++report.checked;
    Sentence positive = Sentence::biconditional(s, Sentence::t_app(code));
    Valuation got = valuation(positive, fp);
    if (got != Valuation::True) {
      report.failures.push_back({print_sentence(positive, sig), "true", to_string(got)});
    }
    Sentence negative =
        Sentence::biconditional(s, Sentence::negation(Sentence::t_app(code)));
    got = valuation(negative, fp);
    if (got != Valuation::False) {
      report.failures.push_back({print_sentence(negative, sig), "false", to_string(got)});
    }
  }
  return report;
}

VerificationReport verify_base_agreement(const FixpointResult& fp) {
  VerificationReport report;
  const Signature& sig = fp.model.signature();
  for (const auto& [code, s] : fp.universe.members()) {
    if (s.kind() != Sentence::Kind::Base) continue;
    ++report.checked;
    bool base_truth = eval_base(fp.model, s.base_formula());
    Valuation expected = base_truth ? Valuation::True : Valuation::False;
    Valuation direct = valuation(s, fp);
    if (direct != expected) {
      report.failures.push_back({print_sentence(s, sig), to_string(expected), to_string(direct)});
    }
    Sentence t_of = Sentence::t_app(code);
    Valuation through_t = valuation(t_of, fp);
    if (through_t != expected) {
      report.failures.push_back(
          {print_sentence(t_of, sig), to_string(expected), to_string(through_t)});
    }
  }
  return report;
}

Valuation classify_grounded(const Sentence& s, const FiniteModel& m) {
  using Kind = Sentence::Kind;
  auto flip = [](Valuation v) {
    if (v == Valuation::True) return Valuation::False;
    if (v == Valuation::False) return Valuation::True;
    return Valuation::Undetermined;
  };
  switch (s.kind()) {
    case Kind::Base:
      return eval_base(m, s.base_formula()) ? Valuation::True : Valuation::False;
    case Kind::TApp: {
      auto referent = decode(s.t_arg(), m.signature());
      if (!referent) return Valuation::Undetermined;
      return classify_grounded(*referent, m);
    }
    case Kind::Not:
      return flip(classify_grounded(s.child(), m));
    case Kind::Or: {
      Valuation a = classify_grounded(s.left(), m);
      Valuation b = classify_grounded(s.right(), m);
      if (a == Valuation::True || b == Valuation::True) return Valuation::True;
      if (a == Valuation::False && b == Valuation::False) return Valuation::False;
      return Valuation::Undetermined;
    }
    case Kind::And: {
      Valuation a = classify_grounded(s.left(), m);
      Valuation b = classify_grounded(s.right(), m);
      if (a == Valuation::False || b == Valuation::False) return Valuation::False;
      if (a == Valuation::True && b == Valuation::True) return Valuation::True;
      return Valuation::Undetermined;
    }
    case Kind::Imp: {
      Valuation a = classify_grounded(s.left(), m);
      Valuation b = classify_grounded(s.right(), m);
      if (a == Valuation::False || b == Valuation::True) return Valuation::True;
      if (a == Valuation::True && b == Valuation::False) return Valuation::False;
      return Valuation::Undetermined;
    }
    case Kind::Iff: {
      Valuation a = classify_grounded(s.left(), m);
      Valuation b = classify_grounded(s.right(), m);
      if (a == Valuation::Undetermined || b == Valuation::Undetermined) {
        return Valuation::Undetermined;
      }
      return a == b ? Valuation::True : Valuation::False;
    }
    case Kind::ExistsT:
      return Valuation::True;
    case Kind::ForallT:
      return Valuation::False;
  }
  return Valuation::Undetermined;
}

}  // namespace veritas
