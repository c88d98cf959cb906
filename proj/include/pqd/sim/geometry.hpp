#pragma once

#include <cmath>
#include <optional>

namespace pqd::sim {

struct Vec2 {
  double x{0.0};
  double y{0.0};

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

struct Segment {
  Vec2 a;
  Vec2 b;
};

Vec2 closest_point(Vec2 p, const Segment& s);
double distance_to_segment(Vec2 p, const Segment& s);

// Parameter t >= 0 at which origin + t*dir meets the segment, dir unit length.
std::optional<double> ray_segment_hit(Vec2 origin, Vec2 dir, const Segment& s);

// First t >= 0 at which a disc of `radius` centered on origin + t*dir touches
// the segment, for an origin currently outside that distance. dir unit length.
std::optional<double> ray_capsule_entry(Vec2 origin, Vec2 dir, const Segment& s, double radius);

// Wraps to (-pi, pi].
double normalize_angle(double a);

}  // namespace pqd::sim
