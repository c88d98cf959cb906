#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "pqd/describe/tokenizer.hpp"
#include "pqd/policy/config.hpp"
#include "pqd/policy/model.hpp"
#include "pqd/sim/simulator.hpp"

namespace pqd::policy {

// One (description, trajectory) training example.
struct TrainingRow {
  std::string entry_id;
  std::string description_text;
  std::string style;
  std::array<double, 2> bd{};
  std::vector<Obs> observations;  // H + 1
  std::vector<Act> actions;       // H
  nlohmann::json intent;          // structured intent when known, else null

  nlohmann::json to_json() const;
  static TrainingRow from_json(const nlohmann::json& j);
  bool operator==(const TrainingRow&) const = default;
};

TrainingRow make_row(std::string entry_id, std::string text, std::string style, const sim::Trajectory& traj,
                     nlohmann::json intent = nullptr);

void write_dataset(const std::filesystem::path& path, const std::vector<TrainingRow>& rows);
std::vector<TrainingRow> read_dataset(const std::filesystem::path& path);

// Tokenizes into model inputs; throws DomainError when a trajectory is
// shorter than the model horizon.
std::vector<SequenceInput> encode_rows(const std::vector<TrainingRow>& rows, const describe::Tokenizer& tok,
                                       const ModelConfig& cfg);

std::vector<std::array<double, 2>> all_actions(const std::vector<TrainingRow>& rows, int horizon);

// Deterministic split: rows whose entry id hashes below `fraction` go to
// validation, so all descriptions of one trajectory land on the same side.
struct Split {
  std::vector<TrainingRow> train, validation;
};
Split split_by_entry(const std::vector<TrainingRow>& rows, double validation_fraction, std::uint64_t seed);

}  // namespace pqd::policy
