#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "pqd/autodiff/tensor.hpp"

namespace pqd::ad {

struct NamedMatrix {
  std::string name;
  Matrix value;
};

// Writes <path> (JSON manifest: metadata plus name, shape, dtype and byte
// offset of every tensor) and <path>.bin (raw little-endian float64).
void save_tensors(const std::filesystem::path& path, const std::vector<NamedMatrix>& tensors,
                  const nlohmann::json& metadata);

struct LoadedTensors {
  nlohmann::json metadata;
  std::vector<NamedMatrix> tensors;

  const Matrix& at(const std::string& name) const;
  bool contains(const std::string& name) const;
};

LoadedTensors load_tensors(const std::filesystem::path& path);

}  // namespace pqd::ad
