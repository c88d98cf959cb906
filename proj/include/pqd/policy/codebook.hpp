#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "json.hpp"

namespace pqd::policy {

// Per-dimension sorted k-means centers over the training actions.
struct ActionCodebook {
  std::array<std::vector<double>, 2> centers;

  int clusters(int dim) const { return static_cast<int>(centers[dim].size()); }
  // Index of the nearest center; ties go to the lower index.
  int nearest(int dim, double value) const;
  bool valid() const;

  nlohmann::json to_json() const;
  static ActionCodebook from_json(const nlohmann::json& j);
  bool operator==(const ActionCodebook&) const = default;
};

// 1-D k-means, k-means++ init, Lloyd's iterations until the largest center
// move is below `tol` or `max_iter` is reached. Sorted ascending. Throws
// DomainError with fewer than k distinct values.
std::vector<double> kmeans_1d(const std::vector<double>& values, int k, std::uint64_t seed,
                              int max_iter = 100, double tol = 1e-9);

ActionCodebook fit_action_codebook(const std::vector<std::array<double, 2>>& actions, int k1, int k2,
                                   std::uint64_t seed);

}  // namespace pqd::policy
