#pragma once

#include <array>
#include <vector>

#include "json.hpp"
#include "pqd/common/random.hpp"
#include "pqd/sim/simulator.hpp"

namespace pqd::qd {

// Flat parameters of a fixed-topology tanh MLP, observation features to
// (linear, angular) commands in [-1, 1]. Per layer: weights row-major
// [out][in], then biases.
struct PolicyGenome {
  std::vector<int> layers{5, 32, 32, 2};
  std::vector<double> params;

  static std::size_t parameter_count(const std::vector<int>& layers);
  // Weights ~ N(0, 1/fan_in), biases 0.
  static PolicyGenome random(const std::vector<int>& layers, Rng& rng);

  bool valid() const;
  std::array<double, sim::kActionDim> forward(const std::array<double, sim::kObservationDim>& x) const;
  sim::Policy policy(double range_max) const;

  nlohmann::json to_json() const;
  static PolicyGenome from_json(const nlohmann::json& j);

  friend bool operator==(const PolicyGenome&, const PolicyGenome&) = default;
};

// g + N(0, sigma^2) per parameter. sigma = 0 returns a copy.
PolicyGenome mutate(const PolicyGenome& g, double sigma, Rng& rng);

}  // namespace pqd::qd
