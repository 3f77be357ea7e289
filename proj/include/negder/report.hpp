#ifndef NEGDER_REPORT_HPP
#define NEGDER_REPORT_HPP

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "negder/analysis.hpp"
#include "negder/counterexample.hpp"
#include "negder/system_file.hpp"

namespace negder {

using Json = nlohmann::ordered_json;

// Machine-readable certificate produced by the command pipeline. Indices in
// the serialized form are 1-based to match the usual notation; the sort
// permutations let callers translate back to their input order.
struct AnalysisReport {
  // Input echo (original ordering, canonically rendered equations).
  std::vector<std::string> variables;
  std::optional<std::vector<long>> weights_input;
  std::vector<std::string> equations;

  // Validation results.
  std::vector<std::size_t> var_perm;  // sorted position -> original position
  std::vector<std::size_t> eq_perm;
  std::vector<long> weights_sorted;
  std::vector<long> degrees;
  std::vector<long> orders;

  // Classification.
  bool complete_intersection = false;
  long dimension = -1;
  bool isolated = false;
  bool normal = false;
  std::vector<unsigned> pure_powers;

  // Condition table and numerical checks (per sorted variable / equation).
  std::vector<std::optional<ConditionWitness>> condition_a;
  std::vector<std::optional<ConditionWitness>> condition_b;
  std::vector<bool> lemma12;

  // Negativity decision.
  std::optional<MinTrivial> min_trivial;
  std::optional<NegativityVerdict> verdict;
  std::optional<std::pair<long, long>> oracle_range;
  std::vector<std::pair<long, std::size_t>> oracle_dims;
  std::optional<bool> oracle_rule_agreement;

  std::size_t theta_generator_count = 0;  // binom(n, t+1) + 1 when normal

  std::optional<CounterexampleChecks> counterexample;

  GroebnerStats engine;
  std::map<std::string, double> timing_ms;

  // Names of the variables in sorted order (for rendering).
  std::vector<std::string> sorted_names() const;

  Json to_json(bool include_timing = true) const;
  std::string to_text() const;
};

// Full pipeline: validate -> complete intersection -> isolated -> normal ->
// conditions -> Lemma 12 -> negativity verdict (Theorem-17 rule on a normal
// ICIS, bounded oracle sweep otherwise).
AnalysisReport analyze_system(const SystemFile& file, const GroebnerOptions& options = {});

// Builds and verifies the counter-example family; the emitted SystemFile
// round-trips through analyze_system to the same verdict.
struct CounterexampleCommand {
  SystemFile file;
  AnalysisReport report;
};
CounterexampleCommand run_counterexample(const CounterexampleParams& params,
                                         const GroebnerOptions& options = {});

// Dimension table of the graded derivation spaces over [lo, hi].
AnalysisReport run_oracle(const SystemFile& file, long lo, long hi,
                          const GroebnerOptions& options = {});

std::vector<WeightSystem> run_infer_weights(const SystemFile& file);

}  // namespace negder

#endif
