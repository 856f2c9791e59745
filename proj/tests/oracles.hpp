#pragma once

// Reference computations used by the tests. They only call
// SupportFunction2D::value / SupportFunction3D::value and rebuild everything
// else from first principles (finite differences, direct geometry).

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "rotors/rotor3d.hpp"
#include "rotors/support2d.hpp"
#include "rotors/triangle_rotor.hpp"

namespace oracle {

using rotors::Vec2;
using rotors::Vec3;

inline double d1(const rotors::SupportFunction2D& h, double t, double e = 1e-4) {
  return (8.0 * (h.value(t + e) - h.value(t - e)) - (h.value(t + 2 * e) - h.value(t - 2 * e))) / (12.0 * e);
}

inline double d2(const rotors::SupportFunction2D& h, double t, double e = 1e-3) {
  return (-h.value(t + 2 * e) + 16.0 * h.value(t + e) - 30.0 * h.value(t) + 16.0 * h.value(t - e) -
          h.value(t - 2 * e)) /
         (12.0 * e * e);
}

inline Vec2 u(double t) { return {std::cos(t), std::sin(t)}; }

inline Vec2 boundary(const rotors::SupportFunction2D& h, double t) {
  return h.value(t) * u(t) + d1(h, t) * Vec2(-std::sin(t), std::cos(t));
}

inline double radius(const rotors::SupportFunction2D& h, double t) { return h.value(t) + d2(h, t); }

/// Boundary point maximizing <x, u(theta)> over a dense polygon.
inline Vec2 argmax_contact(const rotors::SupportFunction2D& h, double theta, int n = 200000) {
  Vec2 best = Vec2::Zero();
  double best_v = -1e300;
  for (int i = 0; i < n; ++i) {
    const Vec2 p = boundary(h, 2.0 * M_PI * i / n);
    const double v = p.dot(u(theta));
    if (v > best_v) best_v = v, best = p;
  }
  return best;
}

inline Vec2 meet(double a1, double p1, double a2, double p2) {
  const double det = std::cos(a1) * std::sin(a2) - std::sin(a1) * std::cos(a2);
  return {(p1 * std::sin(a2) - p2 * std::sin(a1)) / det, (std::cos(a1) * p2 - std::cos(a2) * p1) / det};
}

/// Circumscribed triangle by intersecting support lines; inradius from
/// 2 * area / perimeter.
struct Triangle {
  std::array<Vec2, 3> v;
  double inradius;
};

inline Triangle circumscribe(const rotors::SupportFunction2D& h, const rotors::TriangleShape& s, double rho) {
  std::array<double, 3> ang, off;
  for (int i = 0; i < 3; ++i) ang[i] = s.psi[i] + rho, off[i] = h.value(ang[i]);
  Triangle t;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    t.v[i] = meet(ang[j], off[j], ang[k], off[k]);
  }
  const double area = 0.5 * std::abs((t.v[1] - t.v[0]).x() * (t.v[2] - t.v[0]).y() -
                                     (t.v[1] - t.v[0]).y() * (t.v[2] - t.v[0]).x());
  const double perim = (t.v[0] - t.v[1]).norm() + (t.v[1] - t.v[2]).norm() + (t.v[2] - t.v[0]).norm();
  t.inradius = 2.0 * area / perim;
  return t;
}

/// Random equilateral rotor with harmonics of orders {2, 4, 5, 7} scaled so
/// that c0 - sum (k^2 - 1)|c_k| = margin.
inline rotors::SupportFunction2D random_rotor(std::mt19937_64& rng, double margin = 0.1) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<rotors::Harmonic> hs;
  double weight = 0.0;
  for (int k : {2, 4, 5, 7}) {
    const double a = coef(rng), b = coef(rng);
    hs.push_back({k, a, b});
    weight += (k * k - 1.0) * std::hypot(a, b);
  }
  const double s = (1.0 - margin) / weight;
  for (auto& h : hs) h.a *= s, h.b *= s;
  return rotors::SupportFunction2D(1.0, hs);
}

// ---- 3D ----

inline double value3(const rotors::SupportFunction3D& h, const Vec3& x) {
  const double r = x.norm();
  return r * h.value(x / r);
}

/// Gradient of the homogeneous extension by central differences.
inline Vec3 grad3(const rotors::SupportFunction3D& h, const Vec3& x, double e = 1e-5) {
  Vec3 g;
  for (int i = 0; i < 3; ++i) {
    Vec3 p = x, m = x;
    p[i] += e, m[i] -= e;
    g[i] = (value3(h, p) - value3(h, m)) / (2 * e);
  }
  return g;
}

inline Eigen::Matrix3d hessian3(const rotors::SupportFunction3D& h, const Vec3& x, double e = 1e-4) {
  Eigen::Matrix3d H;
  for (int i = 0; i < 3; ++i) {
    Vec3 p = x, m = x;
    p[i] += e, m[i] -= e;
    H.col(i) = (grad3(h, p) - grad3(h, m)) / (2 * e);
  }
  return 0.5 * (H + H.transpose());
}

/// Volume of the tetrahedron with faces <x, n_i> = h(n_i).
inline double tetra_volume(const rotors::SupportFunction3D& h, const std::array<Vec3, 4>& n) {
  std::array<Vec3, 4> v;
  for (int i = 0; i < 4; ++i) {
    Eigen::Matrix3d a;
    Vec3 b;
    int row = 0;
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      a.row(row) = n[j].transpose();
      b[row] = h.value(n[j]);
      ++row;
    }
    v[i] = a.fullPivLu().solve(b);
  }
  return std::abs((v[1] - v[0]).dot((v[2] - v[0]).cross(v[3] - v[0]))) / 6.0;
}

/// Point on the ruling of x^2 + y^2 - z^2 = 1 and its direction.
inline std::pair<Vec3, Vec3> hyperboloid_ruling(double t) {
  return {Vec3(std::cos(t), std::sin(t), 0.0), Vec3(-std::sin(t), std::cos(t), 1.0)};
}

}  // namespace oracle
