#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pqd/annotate/annotation.hpp"
#include "pqd/describe/description.hpp"
#include "pqd/sim/maze_map.hpp"

namespace pqd::describe {

struct SyntheticParams {
  double placeholder_probability{0.3};  // request ends with "<DESCRIPTOR>"
  double direction_probability{0.5};    // mention the side of an object waypoint
  int max_intermediate{3};
  // Tracks whose annotated points all lie within this distance of the first
  // point are described as staying at the start.
  double stationary_radius{5.0};
};

// A landmark encountered along an annotation track, in temporal order.
struct Encounter {
  int timestep{0};
  LandmarkKind kind{LandmarkKind::color};
  std::string name;
  std::string direction;  // objects only; "near" when on top of it
};

// Objects as they enter the proximity list and tile colors as they change,
// starting with whatever is present at the first point.
std::vector<Encounter> encounters(const annotate::AnnotationTrack& track);

// Deterministic template-based describer. Immutable; safe to share.
class SyntheticDescriber {
 public:
  explicit SyntheticDescriber(SyntheticParams params = {}) : params_(params) {}

  // The bd is recorded in the intent when the text ends with "<DESCRIPTOR>".
  Description describe(const annotate::AnnotationTrack& track, Style style, std::uint64_t seed,
                       const sim::BehaviorDescriptor& bd) const;

  // Landmarks the description of `track` will mention, independent of the
  // seed: start, up to max_intermediate encounters, and the terminal.
  StructuredIntent base_intent(const annotate::AnnotationTrack& track,
                               const sim::BehaviorDescriptor& bd) const;

  const SyntheticParams& params() const { return params_; }

 private:
  SyntheticParams params_;
};

// Convenience wrapper; bd defaults to the last annotated position.
Description synth_describe(const annotate::AnnotationTrack& track, Style style, std::uint64_t seed,
                           const SyntheticParams& params = {});

// True when every annotated point lies within `radius` of the first one.
bool is_stationary(const annotate::AnnotationTrack& track, double radius);

// True when the text contains a digit (descriptions must not leak
// coordinates or timesteps).
bool mentions_numbers(const std::string& text);

}  // namespace pqd::describe
