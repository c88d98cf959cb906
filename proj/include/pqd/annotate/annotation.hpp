#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pqd/sim/maze_map.hpp"
#include "pqd/sim/simulator.hpp"

namespace pqd::annotate {

using sim::Vec2;

struct AnnotationParams {
  int interval{40};          // steps between annotated points
  double prox_radius{30.0};  // objects closer than this are mentioned
  double t_axis{5.0};        // minimum offset along an axis to name that direction

  nlohmann::json to_json() const;
  static AnnotationParams from_json(const nlohmann::json& j);
};

struct AnnotationPoint {
  int timestep{0};
  Vec2 pos;
  // Entries of the form "to the <ns> <ew> of <object>".
  std::vector<std::string> semantics;
  std::string colors;

  friend bool operator==(const AnnotationPoint&, const AnnotationPoint&) = default;
};

struct AnnotationTrack {
  std::vector<AnnotationPoint> points;

  // The Python-dict list used inside LLM prompts, e.g.
  //   {'timestep': 0, 'pos': [20.6, 49.5], 'semantics': ['to the north  of fridge'], 'colors': 'pink'}
  std::string to_prompt_text() const;

  nlohmann::json to_json() const;
  static AnnotationTrack from_json(const nlohmann::json& j);

  friend bool operator==(const AnnotationTrack&, const AnnotationTrack&) = default;
};

// Direction of the agent as seen from the object: "north", "south west",
// "east", ... or "near" when both offsets are below t_axis.
std::string relative_direction(Vec2 agent, Vec2 object, double t_axis);

// "to the north  of fridge", "to the  east of cabinet", "to the south west of
// cabinet"; a suppressed axis leaves its slot empty (double space).
std::string semantic_entry(Vec2 agent, Vec2 object, const std::string& name, double t_axis);

// Object name referenced by a semantics entry.
std::string entry_object(const std::string& entry);
// Direction words of a semantics entry ("north", "south west", "near").
std::string entry_direction(const std::string& entry);

// True when every word of `required` (e.g. "east") appears in `direction`.
bool direction_satisfies(const std::string& direction, const std::string& required);

AnnotationPoint annotate_point(Vec2 pos, int timestep, const sim::MazeMap& map,
                               const AnnotationParams& params);

// Points at t = 0, interval, 2*interval, ... and the last action step H-1.
AnnotationTrack annotate(const sim::Trajectory& traj, const sim::MazeMap& map,
                         const AnnotationParams& params);

}  // namespace pqd::annotate
