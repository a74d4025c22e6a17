#pragma once

#include "alc/exporter.hpp"
#include "alc/wallcross.hpp"

namespace alc {

struct SuiteResult {
  std::string name;
  bool pass = false;
  bool inconclusive = false;
  int checked = 0;
  int failed = 0;
  std::vector<std::string> witnesses;
  nlohmann::json details;  // suite-specific payload (e.g. claim-5 traces)
  long long wall_ms = 0;
};

struct VerificationReport {
  RunConfig config;
  std::vector<SuiteResult> suites;
  std::vector<std::string> notes;
  bool overall_pass() const {
    for (const auto& s : suites)
      if (!s.pass || s.inconclusive) return false;
    return true;
  }
};

// Individual suites; `cx` must come from build_complex(cfg).
SuiteResult suite_salvetti_relations(const Complex& cx);
SuiteResult suite_claim3(const Complex& cx, const std::vector<Relation>& rels,
                         int workers);
SuiteResult suite_claim4(const Complex& cx,
                         const std::vector<ParabolicChamber>& chambers,
                         const std::vector<Relation>& rels, int workers);
SuiteResult suite_claim5(const Complex& cx,
                         const std::vector<ParabolicChamber>& chambers,
                         const std::vector<Relation>& rels, int workers,
                         bool corrupt_first);
SuiteResult suite_first_relations(const Complex& cx, std::size_t budget,
                                  int max_distance);
SuiteResult suite_p_regularity(const RootDatum& rd, Int p);
SuiteResult suite_order_oracle(const Complex& cx,
                               const std::vector<ParabolicChamber>& chambers);
SuiteResult suite_rewrite_confluence(int n_words, int n_orders, std::uint64_t seed);

VerificationReport run_verification(const RunConfig& cfg);

nlohmann::json report_json(const VerificationReport& rep);
std::string report_text(const VerificationReport& rep);

// Deterministic generator of well-typed functor words for confluence testing.
FunctorWord random_well_typed_word(std::mt19937_64& rng, int dim = 2);

}  // namespace alc
