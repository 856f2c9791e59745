#include "rotors/planar.hpp"

#include <Eigen/Dense>
#include <sstream>

namespace rotors {

Concurrence concurrence_point(std::span<const Vec2> points, std::span<const Vec2> directions) {
  // Minimize sum_i |P_i (o - x_i)|^2 with P_i the projector orthogonal to d_i.
  Eigen::Matrix2d lhs = Eigen::Matrix2d::Zero();
  Vec2 rhs = Vec2::Zero();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Eigen::Matrix2d proj = Eigen::Matrix2d::Identity() - directions[i] * directions[i].transpose();
    lhs += proj;
    rhs += proj * points[i];
  }
  if (std::abs(lhs.determinant()) < 1e-24) {
    throw Error(ErrorKind::ParallelNormals, "lines are all parallel; no concurrence point");
  }
  Concurrence out;
  out.point = lhs.inverse() * rhs;
  for (std::size_t i = 0; i < points.size(); ++i) {
    out.residual = std::max(out.residual, std::abs(cross(directions[i], out.point - points[i])));
  }
  return out;
}

Vec2 intersect_lines(const Vec2& n1, double p1, const Vec2& n2, double p2) {
  const double det = cross(n1, n2);
  if (std::abs(det) < 1e-12) {
    std::ostringstream os;
    os << "support lines are parallel (|n1 x n2| = " << std::abs(det) << ")";
    throw Error(ErrorKind::DegenerateShape, os.str());
  }
  return {(p1 * n2.y() - p2 * n1.y()) / det, (n1.x() * p2 - n2.x() * p1) / det};
}

std::array<double, 3> barycentric(const Vec2& p, const std::array<Vec2, 3>& v, double min_area,
                                  ErrorKind kind) {
  const double area = signed_area(v[0], v[1], v[2]);
  if (!(std::abs(area) > min_area)) {
    std::ostringstream os;
    os << "triangle area " << area << " below threshold " << min_area;
    throw Error(kind, os.str());
  }
  return {signed_area(p, v[1], v[2]) / area, signed_area(v[0], p, v[2]) / area,
          signed_area(v[0], v[1], p) / area};
}

}  // namespace rotors
