#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pqd/sim/maze_map.hpp"
#include "pqd/sim/simulator.hpp"

namespace pqd::describe {

enum class Style { request, instruction, narrative };
enum class Source { llm, synthetic };

std::string to_string(Style s);
std::string to_string(Source s);
Style parse_style(const std::string& s);
Source parse_source(const std::string& s);
inline constexpr Style kAllStyles[] = {Style::request, Style::instruction, Style::narrative};

enum class LandmarkKind { object, color };
std::string to_string(LandmarkKind k);

struct Waypoint {
  LandmarkKind kind{LandmarkKind::object};
  std::string name;
  // Direction words the agent must have relative to the object ("east",
  // "south west"); empty when any side will do.
  std::string required_direction;

  friend bool operator==(const Waypoint&, const Waypoint&) = default;
};

struct Terminal {
  LandmarkKind kind{LandmarkKind::color};
  std::string name;
  // The text ends with "<DESCRIPTOR>": the end point is whatever the
  // behavior descriptor says, recorded in target_bd.
  bool bd_placeholder{false};
  std::optional<sim::BehaviorDescriptor> target_bd;

  friend bool operator==(const Terminal&, const Terminal&) = default;
};

// Machine-readable content of a synthetic description, used as ground
// truth by the oracle scorer.
struct StructuredIntent {
  std::vector<Waypoint> waypoints;
  Terminal terminal;
  bool stationary{false};

  // (kind, name) sequence of waypoints then the terminal landmark; ignores
  // direction requirements and the placeholder flag.
  std::vector<std::pair<LandmarkKind, std::string>> skeleton() const;

  // Throws DomainError when a name is not in the map's vocabulary.
  void validate(const sim::MazeMap& map) const;

  nlohmann::json to_json() const;
  static StructuredIntent from_json(const nlohmann::json& j);

  friend bool operator==(const StructuredIntent&, const StructuredIntent&) = default;
};

struct Description {
  Style style{Style::request};
  std::string text;
  Source source{Source::synthetic};
  std::optional<StructuredIntent> intent;
  std::string raw_response;  // LLM completion, kept for audit

  nlohmann::json to_json() const;
  static Description from_json(const nlohmann::json& j);

  friend bool operator==(const Description&, const Description&) = default;
};

}  // namespace pqd::describe
