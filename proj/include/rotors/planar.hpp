#pragma once

#include <array>
#include <span>

#include "rotors/error.hpp"
#include "rotors/support2d.hpp"

namespace rotors {

struct Concurrence {
  Vec2 point = Vec2::Zero();
  /// Largest distance from `point` to any of the lines.
  double residual = 0.0;
};

/// Least-squares common point of the lines {points[i] + t directions[i]}.
/// Directions must be unit vectors. Throws ParallelNormals if they are all
/// parallel.
Concurrence concurrence_point(std::span<const Vec2> points, std::span<const Vec2> directions);

/// Intersection of the lines <x, n1> = p1 and <x, n2> = p2. Throws
/// DegenerateShape when they are parallel.
Vec2 intersect_lines(const Vec2& n1, double p1, const Vec2& n2, double p2);

/// Signed area of the triangle (a, b, c), positive when counterclockwise.
inline double signed_area(const Vec2& a, const Vec2& b, const Vec2& c) {
  return 0.5 * cross(b - a, c - a);
}

/// Barycentric coordinates of p w.r.t. (v0, v1, v2) from signed-area ratios.
/// Throws `kind` when |area| <= min_area.
std::array<double, 3> barycentric(const Vec2& p, const std::array<Vec2, 3>& v, double min_area,
                                  ErrorKind kind);

}  // namespace rotors
