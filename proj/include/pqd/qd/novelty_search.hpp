#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pqd/annotate/annotation.hpp"
#include "pqd/qd/genome.hpp"
#include "pqd/sim/simulator.hpp"

namespace pqd::qd {

struct DescriptionRecord {
  std::string style;
  std::string text;
  std::string intent_id;

  friend bool operator==(const DescriptionRecord&, const DescriptionRecord&) = default;
};

struct RepertoireEntry {
  PolicyGenome genome;
  sim::Trajectory trajectory;
  sim::BehaviorDescriptor bd;
  std::optional<annotate::AnnotationTrack> annotation;
  std::vector<DescriptionRecord> descriptions;
  std::string map_fingerprint;

  nlohmann::json to_json() const;
  static RepertoireEntry from_json(const nlohmann::json& j);

  friend bool operator==(const RepertoireEntry&, const RepertoireEntry&) = default;
};

struct NSConfig {
  int population_size{128};
  int offspring_per_parent{1};
  int generations{200};
  double mutation_sigma{0.1};
  int novelty_k{15};
  int archive_add_most_novel{6};
  int archive_add_random{2};
  int horizon{400};
  std::vector<int> hidden_layers{32, 32};
  std::uint64_t rng_seed{0};
  int workers{1};

  void validate() const;
  nlohmann::json to_json() const;
  static NSConfig from_json(const nlohmann::json& j);
};

// Mean distance from bd to its k nearest points of `reference` (all of them
// when fewer than k).
double novelty(const sim::BehaviorDescriptor& bd, const std::vector<sim::BehaviorDescriptor>& reference, int k);

// Occupied cells of a cells x cells grid over the map.
int bd_coverage(const std::vector<sim::BehaviorDescriptor>& bds, const sim::MazeMap& map, int cells = 20);

struct NSResult {
  std::vector<RepertoireEntry> archive;
  std::vector<int> coverage;  // after each generation, 20x20 grid
};

using GenerationCallback = std::function<void(int generation, const NSResult&)>;

// Pure novelty search. Each generation every parent produces
// offspring_per_parent mutants; novelty is computed over population,
// offspring and archive (excluding the individual itself); the most novel
// and a few random offspring join the archive; the next population is the
// most novel of parents and offspring. generations = 0 gives an empty archive.
NSResult run_novelty_search(const sim::Simulator& sim, const NSConfig& cfg,
                            const GenerationCallback& on_generation = {});

// Concatenation in (archive, insertion) order. Throws DomainError when the
// archives come from different maps.
std::vector<RepertoireEntry> merge_repertoires(const std::vector<std::vector<RepertoireEntry>>& archives);

void write_repertoire(const std::filesystem::path& path, const std::vector<RepertoireEntry>& entries);
std::vector<RepertoireEntry> read_repertoire(const std::filesystem::path& path);

// Re-rolls the stored genome; true when the result equals the stored trajectory.
bool replays(const RepertoireEntry& e, const sim::Simulator& sim);

}  // namespace pqd::qd
