#pragma once

#include <string>
#include <vector>

#include "pqd/annotate/annotation.hpp"
#include "pqd/describe/description.hpp"
#include "pqd/describe/llm_client.hpp"
#include "pqd/sim/maze_map.hpp"
#include "pqd/sim/simulator.hpp"

namespace pqd::eval {

// Alignment score on the 11-point grid {0.0, 0.1, ..., 1.0}.
struct Score {
  double value{0.0};  // on the grid
  double raw{0.0};    // before clamping and snapping

  static Score from_raw(double raw);
  int tenths() const;
};

// Clamp to [0, 1] and round half up to the nearest tenth. A 1e-9 slack
// absorbs binary representation error (0.35 * 10 = 3.4999999999999996).
double snap_to_grid(double v);

struct BdError {
  double distance{0.0};
  double normalized{0.0};  // distance / map diagonal
};

// DomainError when either point lies outside the map.
BdError bd_error(const sim::BehaviorDescriptor& target, const sim::BehaviorDescriptor& achieved,
                 const sim::MazeMap& map);

// The judge instructions with the description after [DESCR] and the track
// after [DICT], ending with the formatting rule.
std::string build_judge_prompt(const annotate::AnnotationTrack& track, const std::string& prompt);

// Last "score==<float>" in the response, clamped and snapped. ParseError
// carrying the response when absent.
Score parse_judge_score(const std::string& response);

// Inverse of parse_judge_score for grid values.
std::string format_judge_score(double value);

struct JudgeResult {
  Score score;
  std::string transcript;
};

JudgeResult judge(describe::LLMClient& client, const annotate::AnnotationTrack& track, const std::string& prompt);

struct OracleParams {
  annotate::AnnotationParams annotation{};
  double stationary_radius{5.0};
  double waypoint_weight{0.7};
  double terminal_weight{0.3};
};

struct OracleBreakdown {
  int waypoints_hit{0};
  int waypoints_total{0};
  bool terminal_hit{false};
  Score score;
};

// Deterministic alignment between a trajectory and a structured intent:
// waypoint_weight * (waypoints satisfied in order / waypoints) +
// terminal_weight * terminal match, snapped to the grid.
OracleBreakdown oracle_breakdown(const sim::Trajectory& traj, const describe::StructuredIntent& intent,
                                 const sim::MazeMap& map, const OracleParams& params = {});
Score oracle_score(const sim::Trajectory& traj, const describe::StructuredIntent& intent, const sim::MazeMap& map,
                   const OracleParams& params = {});

}  // namespace pqd::eval

namespace pqd::eval {

// Best-effort intent for free text: object and tile-color names in order of
// appearance (longest name first at each position); the last mention is the
// terminal unless the text ends at "<DESCRIPTOR>", in which case the target
// bd is. Text naming nothing targets the bd. Used to oracle-score prompts
// typed by hand.
describe::StructuredIntent intent_from_text(const std::string& text, const sim::MazeMap& map,
                                            const sim::BehaviorDescriptor& target_bd);

}  // namespace pqd::eval
