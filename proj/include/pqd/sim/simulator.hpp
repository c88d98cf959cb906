#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pqd/sim/maze_map.hpp"

namespace pqd::sim {

struct SimParams {
  double v_max{2.0};                // units per step
  double omega_max{M_PI / 10.0};    // radians per step
  double robot_radius{3.0};
  double range_max{50.0};
  Vec2 start{15.0, 15.0};
  double start_heading{0.0};        // east

  nlohmann::json to_json() const;
  static SimParams from_json(const nlohmann::json& j);
};

struct RobotState {
  Vec2 position;
  double heading{0.0};  // (-pi, pi]
  int step_index{0};
};

constexpr std::size_t kObservationDim = 5;
constexpr std::size_t kActionDim = 2;

struct Observation {
  // Laser depths at relative angles 0, +pi/2, -pi/2.
  std::array<double, 3> ranges{};
  std::array<bool, 2> bumpers{};

  // Network input: ranges / range_max followed by bumpers as 0/1.
  std::array<double, kObservationDim> features(double range_max) const;

  friend bool operator==(const Observation&, const Observation&) = default;
};

struct Action {
  double linear{0.0};
  double angular{0.0};

  // Clamps each component to [-1, 1].
  static Action clamped(double linear, double angular);

  friend bool operator==(const Action&, const Action&) = default;
};

struct BehaviorDescriptor {
  double x{0.0};
  double y{0.0};

  Vec2 point() const { return {x, y}; }
  friend bool operator==(const BehaviorDescriptor&, const BehaviorDescriptor&) = default;
};

struct Trajectory {
  std::vector<Observation> observations;  // H + 1
  std::vector<Action> actions;            // H
  std::vector<RobotState> states;         // H + 1
  BehaviorDescriptor bd;

  int horizon() const { return static_cast<int>(actions.size()); }
  bool consistent() const;

  nlohmann::json to_json() const;
  static Trajectory from_json(const nlohmann::json& j);

  friend bool operator==(const Trajectory& a, const Trajectory& b);
};

class RolloutError : public std::runtime_error {
 public:
  RolloutError(const std::string& what, int step) : std::runtime_error(what), step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

using Policy = std::function<Action(const Observation&)>;

// Distance along the ray to the nearest obstacle (walls and map boundary),
// clamped to range_max.
double raycast(const MazeMap& map, Vec2 origin, double angle, double range_max);

// Deterministic differential-drive robot in a MazeMap. Immutable after
// construction; one instance may serve any number of concurrent rollouts.
class Simulator {
 public:
  explicit Simulator(MazeMap map, SimParams params = {});

  const MazeMap& map() const { return map_; }
  const SimParams& params() const { return params_; }

  RobotState initial_state() const;
  Observation observe(const RobotState& s, bool bumped) const;
  std::pair<RobotState, Observation> step(const RobotState& s, Action a) const;

  double raycast(Vec2 origin, double angle) const;

  // Closed-loop rollout of H steps from the start pose.
  Trajectory rollout(const Policy& policy, int horizon) const;

  // Minimum distance from p to any obstacle.
  double clearance(Vec2 p) const;

 private:
  // Largest advance in [0, len] along axis direction u before contact.
  double free_advance(Vec2 pos, Vec2 u, double len) const;

  MazeMap map_;
  SimParams params_;
  std::vector<Segment> obstacles_;
};

}  // namespace pqd::sim
