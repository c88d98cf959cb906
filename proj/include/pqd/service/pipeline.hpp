#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pqd/annotate/annotation.hpp"
#include "pqd/describe/description.hpp"
#include "pqd/describe/llm_client.hpp"
#include "pqd/describe/synthetic.hpp"
#include "pqd/describe/tokenizer.hpp"
#include "pqd/eval/testset.hpp"
#include "pqd/policy/config.hpp"
#include "pqd/qd/novelty_search.hpp"
#include "pqd/sim/simulator.hpp"

namespace pqd::service {

namespace fs = std::filesystem;

struct WeightedClient {
  describe::LLMClientConfig client;
  double weight{1.0};
};

struct DescriberConfig {
  describe::Source source{describe::Source::synthetic};
  std::vector<describe::Style> styles{describe::kAllStyles[0], describe::kAllStyles[1], describe::kAllStyles[2]};
  describe::SyntheticParams synthetic{};
  std::vector<WeightedClient> llm;  // used when source is llm
  int workers{1};
};

// Every stage reads and writes files under output_dir. The global seed
// overrides the per-stage seeds of the nested configs.
struct PipelineConfig {
  fs::path map_path;  // empty: the built-in default map
  sim::SimParams sim{};
  qd::NSConfig ns{};
  int ns_runs{1};
  annotate::AnnotationParams annotation{};
  DescriberConfig describer{};
  int tokenizer_vocab{512};
  std::string model_preset{"desk"};
  nlohmann::json model_overrides = nlohmann::json::object();
  policy::TrainConfig train{};
  double validation_fraction{0.1};
  int test_examples{100};
  eval::EvalConfig eval{};
  std::optional<describe::LLMClientConfig> judge;  // enables judge scoring
  fs::path output_dir{"out"};
  std::uint64_t seed{0};

  // Pushes `seed` into the nested configs.
  void propagate_seed();
  // ConfigError on inconsistent values or missing referenced files.
  void validate() const;
  nlohmann::json to_json() const;
  static PipelineConfig from_json(const nlohmann::json& j);
  // Relative paths in the file are resolved against its directory.
  static PipelineConfig load(const fs::path& path);
};

// Stage failure carrying the stage name for diagnostics.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

// File names inside output_dir.
namespace artifacts {
inline constexpr const char* kRepertoire = "repertoire.jsonl";
inline constexpr const char* kCoverage = "ns_coverage.csv";
inline constexpr const char* kAnnotated = "annotated.jsonl";
inline constexpr const char* kDescriptions = "descriptions.jsonl";
inline constexpr const char* kTokenizer = "tokenizer.json";
inline constexpr const char* kTrain = "train.jsonl";
inline constexpr const char* kValidation = "val.jsonl";
inline constexpr const char* kTest = "test.jsonl";
inline constexpr const char* kModelDir = "model";
inline constexpr const char* kCheckpoint = "model/best.json";
inline constexpr const char* kEvalSummary = "eval_summary.json";
inline constexpr const char* kEvalExamples = "eval_examples.jsonl";
inline constexpr const char* kScoreHistogram = "score_histogram.csv";
inline constexpr const char* kBdHistogram = "bd_error_histogram.csv";
inline constexpr const char* kManifest = "manifest.json";
}  // namespace artifacts

sim::MazeMap load_map(const PipelineConfig& cfg);
policy::ModelConfig model_config(const PipelineConfig& cfg, int vocab_size);

// One line of descriptions.jsonl.
struct DescriptionRow {
  std::string entry_id;
  std::size_t entry_index{0};
  describe::Description description;
  nlohmann::json to_json() const;
  static DescriptionRow from_json(const nlohmann::json& j);
};

std::string entry_id(std::size_t index);

using Progress = std::function<void(const std::string&)>;

// Stage functions. Each returns a small JSON summary and records the
// fingerprints of the files it wrote in manifest.json.
nlohmann::json build_repertoire(const PipelineConfig& cfg, const Progress& progress = {});
nlohmann::json annotate_repertoire(const PipelineConfig& cfg, const Progress& progress = {});
// `client` overrides the configured LLM clients (tests inject fakes).
nlohmann::json describe_repertoire(const PipelineConfig& cfg, describe::LLMClient* client = nullptr,
                                   const Progress& progress = {});
// Trains the tokenizer on the training descriptions and writes the train,
// validation and held-out test splits.
nlohmann::json tokenize_and_split(const PipelineConfig& cfg, const Progress& progress = {});
nlohmann::json train_model(const PipelineConfig& cfg, const Progress& progress = {});
nlohmann::json evaluate_model(const PipelineConfig& cfg, describe::LLMClient* judge_client = nullptr,
                              const Progress& progress = {});

// Runs `fn` and rethrows any failure as StageError(stage, ...).
nlohmann::json run_stage(const std::string& stage, const std::function<nlohmann::json()>& fn);

// Stage -> {file: fingerprint}, read back from output_dir.
nlohmann::json read_manifest(const fs::path& output_dir);

std::unique_ptr<describe::LLMClient> make_client_mix(const std::vector<WeightedClient>& clients, std::uint64_t seed);

}  // namespace pqd::service
