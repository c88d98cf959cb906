#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "pqd/sim/geometry.hpp"

namespace pqd::sim {

struct MapObject {
  std::string name;
  Vec2 position;
  // Tile label as listed in the object table. Metadata only: may disagree
  // with tile_color(position), e.g. the cactus.
  std::string nominal_tile;
};

// Semantic map: walls, a 3x3 colored tile grid and named landmarks.
// Landmarks are not obstacles.
struct MazeMap {
  std::string name;
  double width{200.0};
  double height{200.0};
  std::vector<Segment> walls;
  std::vector<MapObject> objects;
  // Rows from the top of the map.
  std::array<std::array<std::string, 3>, 3> tile_grid;

  static MazeMap from_json(const nlohmann::json& j);
  static MazeMap load(const std::filesystem::path& path);
  // The bundled reference map (data/maps/default.json).
  static const MazeMap& default_map();

  nlohmann::json to_json() const;

  bool contains(Vec2 p) const;
  std::string tile_color(Vec2 p) const;
  double diagonal() const;

  // Walls plus the four boundary edges.
  std::vector<Segment> obstacles() const;

  const MapObject* find_object(const std::string& object_name) const;
  bool has_color(const std::string& color) const;
  std::vector<std::string> colors() const;

  // Stable content hash; two maps with the same fingerprint are the same map.
  std::string fingerprint() const;

  // Throws DomainError when an object lies outside the map or within
  // `clearance` of a wall.
  void validate(double clearance = 0.0) const;
};

}  // namespace pqd::sim
