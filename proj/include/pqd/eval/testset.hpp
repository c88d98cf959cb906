#pragma once

#include <array>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pqd/describe/description.hpp"
#include "pqd/describe/llm_client.hpp"
#include "pqd/describe/tokenizer.hpp"
#include "pqd/eval/scoring.hpp"
#include "pqd/policy/codebook.hpp"
#include "pqd/policy/model.hpp"
#include "pqd/sim/simulator.hpp"

namespace pqd::eval {

struct TestExample {
  std::string entry_id;
  std::string prompt;
  sim::BehaviorDescriptor bd;
  std::optional<describe::StructuredIntent> intent;  // required by the oracle scorer

  nlohmann::json to_json() const;
  static TestExample from_json(const nlohmann::json& j);
};

enum class Scorer { oracle, judge };
Scorer parse_scorer(const std::string& s);
std::string to_string(Scorer s);

struct EvalConfig {
  int n_rollouts{5};
  double temperature{1.0};
  int horizon{0};  // 0: the model horizon
  std::uint64_t seed{0};
  int workers{1};
  Scorer scorer{Scorer::oracle};
  OracleParams oracle{};

  nlohmann::json to_json() const;
  static EvalConfig from_json(const nlohmann::json& j);
};

struct ExampleResult {
  std::string entry_id;
  std::vector<double> bd_errors_normalized;  // one per rollout
  int chosen{0};                             // argmin bd error, lowest index on ties
  sim::Trajectory chosen_trajectory;
  double chosen_bd_error{0.0};             // normalized
  std::optional<Score> score;               // of the chosen rollout
  std::string judge_transcript;
  double rollout_mean{0.0};
  double rollout_std{0.0};                  // population std over the rollouts

  nlohmann::json to_json(bool with_trajectory = false) const;
};

struct TestsetSummary {
  std::vector<ExampleResult> examples;
  double median_bd_error{0.0};  // normalized, of the chosen rollouts
  std::optional<double> median_score;
  double rollout_error_mean{0.0};  // over every rollout of every example
  double rollout_error_std{0.0};
  std::array<int, 11> score_histogram{};  // counts per tenth
  std::vector<int> bd_error_histogram;    // bins of width bd_bin_width over [0, 1]
  double bd_bin_width{0.05};

  nlohmann::json to_json() const;
  std::string score_histogram_csv() const;
  std::string bd_error_histogram_csv() const;
};

double median(std::vector<double> v);

// Best-of-n closed-loop evaluation: per example, n generate() rollouts with
// per-(example, rollout) seeds, keep the lowest bd error, score it. Judge
// scoring without a client is a ConfigError.
TestsetSummary evaluate_testset(const policy::PolicyModel& model, const policy::ActionCodebook& codebook,
                                const describe::Tokenizer& tokenizer, const sim::Simulator& sim,
                                const std::vector<TestExample>& examples, const EvalConfig& cfg,
                                describe::LLMClient* judge_client = nullptr);

}  // namespace pqd::eval
