#include "rotors/immobilize.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <limits>
#include <sstream>

#include "rotors/error.hpp"
#include "rotors/planar.hpp"

namespace rotors {

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::Immobilizes: return "Immobilizes";
    case Decision::DoesNotImmobilize: return "DoesNotImmobilize";
    case Decision::Indeterminate: return "Indeterminate";
  }
  return "Unknown";
}

namespace {

bool positively_spanning(std::array<double, 3> angles) {
  std::sort(angles.begin(), angles.end());
  for (int i = 0; i < 3; ++i) {
    const double gap = canonical_angle(angles[(i + 1) % 3] - angles[i]);
    if (!(gap < kPi - 1e-12)) return false;
  }
  return true;
}

}  // namespace

ImmobilizationReport omega(const SupportFunction2D& h, const std::array<double, 3>& angles,
                           double band, double concurrency_tol) {
  ImmobilizationReport report;
  auto& c = report.contacts;
  std::array<Vec2, 3> normals;
  for (int i = 0; i < 3; ++i) {
    c.angles[i] = canonical_angle(angles[i]);
    normals[i] = unit(angles[i]);
    c.x[i] = boundary_point(h, angles[i]);
    c.kappa[i] = 1.0 / curvature_radius(h, angles[i]);
  }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    if (std::abs(cross(normals[i], normals[j])) < 1e-12) {
      throw Error(ErrorKind::DegenerateShape, "two contact normals are parallel");
    }
  }
  if (!positively_spanning(angles)) {
    throw Error(ErrorKind::DegenerateShape,
                "contact normals do not positively span the plane; the support lines do not "
                "enclose the body");
  }

  const auto conc = concurrence_point(c.x, normals);
  c.center = conc.point;
  c.concurrency_residual = conc.residual;
  double scale = 0.0;
  for (int i = 0; i < 3; ++i) {
    c.r[i] = (c.x[i] - c.center).norm();
    scale = std::max(scale, c.r[i]);
  }
  if (conc.residual > concurrency_tol * std::max(scale, 1e-300)) {
    std::ostringstream os;
    os << "contact normals miss their common point by " << conc.residual;
    throw Error(ErrorKind::NotConcurrent, os.str());
  }

  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    c.vertices[i] = intersect_lines(normals[j], h.value(angles[j]), normals[k], h.value(angles[k]));
  }
  c.a = barycentric(c.center, c.vertices, 1e-12 * scale * scale, ErrorKind::DegenerateShape);

  report.omega = 0.0;
  for (int i = 0; i < 3; ++i) report.omega += c.a[i] * c.kappa[i] * c.r[i];
  if (report.omega < 1.0 - band) {
    report.decision = Decision::Immobilizes;
  } else if (report.omega > 1.0 + band) {
    report.decision = Decision::DoesNotImmobilize;
  } else {
    report.decision = Decision::Indeterminate;
  }
  return report;
}

double penetration_depth(const SupportFunction2D& h, const Vec2& y, double seed) {
  // Minimize F(theta) = h(theta) - <y, u(theta)> near the seed normal.
  double t = seed;
  for (int it = 0; it < 30; ++it) {
    const auto j = h.jet(t);
    const double g = j.d1 - y.dot(unit_perp(t));
    const double gg = j.d2 + y.dot(unit(t));
    if (gg <= 0.0) break;
    const double step = g / gg;
    t -= step;
    if (std::abs(step) < 1e-15) break;
  }
  return h.value(t) - y.dot(unit(t));
}

namespace {

struct MotionProbe {
  const SupportFunction2D& h;
  std::array<double, 3> angles;
  std::array<Vec2, 3> x;
  Vec2 center;

  // Largest depth among the contacts for the body moved by
  // z -> center + R_delta (z - center) + t.
  double max_depth(double delta, const Vec2& t) const {
    const double c = std::cos(delta);
    const double s = std::sin(delta);
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
      const Vec2 rel = x[i] - center - t;
      const Vec2 y = center + Vec2{c * rel.x() + s * rel.y(), -s * rel.x() + c * rel.y()};
      worst = std::max(worst, penetration_depth(h, y, angles[i]));
    }
    return worst;
  }
};

}  // namespace

bool penetration_oracle(const SupportFunction2D& h, const std::array<double, 3>& angles,
                        const PenetrationOptions& options) {
  const int n = std::max(options.grid_size, 3);
  const double radius = options.grid_radius;
  MotionProbe probe{h, angles, {}, Vec2::Zero()};
  std::array<Vec2, 3> normals;
  for (int i = 0; i < 3; ++i) {
    probe.x[i] = boundary_point(h, angles[i]);
    normals[i] = unit(angles[i]);
  }
  probe.center = concurrence_point(probe.x, normals).point;
  // Depths at or below this count as touching, not penetrating.
  double scale = 0.0;
  for (const auto& x : probe.x) scale = std::max(scale, (x - probe.center).norm());
  const double touch_tol = 1e-12 * std::max(scale, 1.0);

  const int half = n / 2;
  for (int di = 0; di < n; ++di) {
    const double delta = -radius + 2.0 * radius * di / (n - 1);
    const bool pure_translation = std::abs(delta) < 1e-12 * radius;

    Vec2 window_center = Vec2::Zero();
    double window = pure_translation ? radius : std::min(radius, std::abs(delta));
    const int levels = pure_translation ? 1 : std::max(options.refine_levels, 1);
    for (int level = 0; level < levels; ++level) {
      const double spacing = window / half;
      double best = std::numeric_limits<double>::infinity();
      Vec2 best_t = window_center;
      for (int ix = -half; ix <= half; ++ix) {
        for (int iy = -half; iy <= half; ++iy) {
          const Vec2 t = window_center + spacing * Vec2{double(ix), double(iy)};
          if (t.norm() > radius) continue;
          if (pure_translation && ix == 0 && iy == 0) continue;
          const double depth = probe.max_depth(delta, t);
          if (depth <= touch_tol) return false;
          if (depth < best) {
            best = depth;
            best_t = t;
          }
        }
      }
      window_center = best_t;
      window = 2.0 * spacing;
    }
  }
  return true;
}

std::vector<double> concurrent_normal_angles(const SupportFunction2D& h, const Vec2& point, int grid) {
  auto g = [&](double t) { return h.derivative(t, 1) - point.dot(unit_perp(t)); };
  std::vector<double> roots;
  double t0 = 0.0;
  double g0 = g(t0);
  for (int i = 1; i <= grid; ++i) {
    const double t1 = kTwoPi * i / grid;
    const double g1 = g(t1);
    if (g0 == 0.0) {
      roots.push_back(t0);
    } else if (g0 * g1 < 0.0) {
      boost::uintmax_t max_iter = 100;
      const auto [lo, hi] = boost::math::tools::toms748_solve(
          g, t0, t1, g0, g1, boost::math::tools::eps_tolerance<double>(52), max_iter);
      roots.push_back(canonical_angle(0.5 * (lo + hi)));
    }
    t0 = t1;
    g0 = g1;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<std::array<double, 3>> concurrent_triples(const SupportFunction2D& h, const Vec2& point,
                                                      int grid) {
  const auto roots = concurrent_normal_angles(h, point, grid);
  std::vector<std::array<double, 3>> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      for (std::size_t k = j + 1; k < roots.size(); ++k) {
        const std::array<double, 3> tri{roots[i], roots[j], roots[k]};
        bool transversal = true;
        for (int a = 0; a < 3; ++a) {
          if (std::abs(std::sin(tri[a] - tri[(a + 1) % 3])) < 1e-6) transversal = false;
        }
        if (transversal && positively_spanning(tri)) out.push_back(tri);
      }
    }
  }
  return out;
}

}  // namespace rotors
