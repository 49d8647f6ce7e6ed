#include "veritas/regress.hpp"

#include <algorithm>
#include <stdexcept>

namespace veritas {

std::optional<std::uint64_t> OmegaSet::pivot() const {
  if (!valid()) throw std::invalid_argument("Z must be nonempty");
  if (naturals.empty()) return std::nullopt;  // omega
  return *naturals.begin();
}

bool f_truth(std::uint64_t i, const OmegaSet& z) {
  auto p = z.pivot();
  return !p || i < *p;
}

namespace {

std::uint64_t max_index(const RegressStatement& s) {
  if (const auto* f = std::get_if<FStatement>(&s)) return f->index;
  return std::get<FPrefixDisjunction>(s).count - 1;
}

}  // namespace

bool statement_truth(const RegressStatement& s, std::optional<std::uint64_t> pivot) {
  if (const auto* f = std::get_if<FStatement>(&s)) {
    return !pivot || f->index < *pivot;
  }
  const auto& d = std::get<FPrefixDisjunction>(s);
  if (d.count == 0) throw std::invalid_argument("empty disjunction");
  // F_0 is the weakest disjunct: the disjunction is true iff F_0 is.
  return !pivot || 0 < *pivot;
}

bool statement_truth(const RegressStatement& s, const OmegaSet& z) {
  return statement_truth(s, z.pivot());
}

bool entails(const RegressStatement& a, const RegressStatement& b, std::uint64_t horizon) {
  if (max_index(a) > horizon || max_index(b) > horizon) {
    throw std::invalid_argument("horizon must cover all statement indices");
  }
  for (std::uint64_t m = 0; m <= horizon; ++m) {
    if (statement_truth(a, m) && !statement_truth(b, m)) return false;
  }
  if (statement_truth(a, std::nullopt) && !statement_truth(b, std::nullopt)) return false;
  return true;
}

bool justifies(const RegressStatement& a, const RegressStatement& b, const OmegaSet& z) {
  bool a_true = statement_truth(a, z);
  bool b_true = statement_truth(b, z);
  std::uint64_t horizon = std::max(max_index(a), max_index(b)) + 1;
  if (entails(a, b, horizon) && a_true) return true;          // modus ponens
  if (a_true == !b_true && !a_true) return true;              // a <-> !b true, a false
  return false;
}

bool RegressReport::pass() const {
  return cond_entails_chain && cond_no_entail_next && cond_no_justify_next &&
         lemma_a_all_false && lemma_a_f0_matches_biconditional && lemma_b_upward_truth &&
         lemma_c_saturation_iff_all_true;
}

nlohmann::json RegressReport::to_json() const {
  nlohmann::json z_json = {{"naturals", std::vector<std::uint64_t>(z.naturals.begin(),
                                                                   z.naturals.end())},
                           {"omega", z.has_omega}};
  nlohmann::json truths = nlohmann::json::array();
  for (bool t : f_truths) truths.push_back(t);
  nlohmann::json justs = nlohmann::json::array();
  for (bool j : justifies_prev) justs.push_back(j);
  return {{"z", z_json},
          {"horizon", horizon},
          {"pivot", pivot ? nlohmann::json(std::to_string(*pivot)) : nlohmann::json("omega")},
          {"f_truth", truths},
          {"justifies_previous", justs},
          {"conditions",
           {{"entails_chain", cond_entails_chain},
            {"no_entail_next", cond_no_entail_next},
            {"no_justify_next", cond_no_justify_next},
            {"justification_saturated", saturated}}},
          {"lemma",
           {{"a_applicable", lemma_a_applicable},
            {"a_all_false", lemma_a_all_false},
            {"a_f0_matches_biconditional", lemma_a_f0_matches_biconditional},
            {"b_upward_truth", lemma_b_upward_truth},
            {"c_saturation_iff_all_true", lemma_c_saturation_iff_all_true}}},
          {"f0_justified", f0_justified},
          {"pass", pass()}};
}

RegressReport analyze_regress(const OmegaSet& z, std::uint64_t horizon) {
  if (!z.valid()) throw std::invalid_argument("Z must be nonempty");
  if (horizon < 2) throw std::invalid_argument("horizon must be at least 2");

  RegressReport report;
  report.z = z;
  report.horizon = horizon;
  report.pivot = z.pivot();

  for (std::uint64_t i = 0; i <= horizon; ++i) report.f_truths.push_back(f_truth(i, z));

  report.cond_entails_chain = true;
  report.cond_no_entail_next = true;
  report.cond_no_justify_next = true;
  for (std::uint64_t i = 1; i <= horizon; ++i) {
    if (!entails(FStatement{i}, FStatement{i - 1}, horizon)) report.cond_entails_chain = false;
    if (entails(FPrefixDisjunction{i}, FStatement{i}, horizon)) report.cond_no_entail_next = false;
    if (justifies(FPrefixDisjunction{i}, FStatement{i}, z)) report.cond_no_justify_next = false;
    report.justifies_prev.push_back(justifies(FStatement{i}, FStatement{i - 1}, z));
  }

  report.saturated = !report.pivot.has_value();
  report.f0_justified = justifies(FStatement{1}, FStatement{0}, z);

  // Lemma (a): F_1 false forces every F_i false, and F_0 is justified exactly
  // when F_0 <-> !F_1 is true.
  report.lemma_a_applicable = !report.f_truths[1];
  if (report.lemma_a_applicable) {
    for (std::uint64_t i = 1; i <= horizon; ++i) {
      if (report.f_truths[i]) report.lemma_a_all_false = false;
    }
    bool biconditional_true = report.f_truths[0] == !report.f_truths[1];
    report.lemma_a_f0_matches_biconditional = (report.f0_justified == biconditional_true);
  }

  // Lemma (b): truth propagates downward, i.e. never false-then-true.
  for (std::uint64_t i = 0; i < horizon; ++i) {
    if (report.f_truths[i + 1] && !report.f_truths[i]) report.lemma_b_upward_truth = false;
  }

  // Lemma (c): exact when the pivot is visible within the horizon (or omega).
  if (!report.pivot || *report.pivot <= horizon) {
    bool all_true = true;
    for (std::uint64_t i = 1; i <= horizon; ++i) all_true = all_true && report.f_truths[i];
    report.lemma_c_saturation_iff_all_true = (report.saturated == all_true);
    if (report.saturated && !report.f0_justified) {
      report.lemma_c_saturation_iff_all_true = false;
    }
  }

  return report;
}

}  // namespace veritas
