#include "rotors/triangle_rotor.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <sstream>

#include "rotors/error.hpp"
#include "rotors/planar.hpp"

namespace rotors {

TriangleShape TriangleShape::equilateral(double inradius) {
  return {{kPi / 2.0, 7.0 * kPi / 6.0, 11.0 * kPi / 6.0}, inradius};
}

TriangleShape TriangleShape::from_vertices(const Vec2& a1, const Vec2& a2, const Vec2& a3) {
  const std::array<Vec2, 3> v{a1, a2, a3};
  const double area = signed_area(a1, a2, a3);
  if (area <= 0.0) {
    throw Error(ErrorKind::DegenerateShape, "vertices must be counterclockwise and non-collinear");
  }
  TriangleShape shape;
  double perimeter = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Vec2 edge = v[(i + 2) % 3] - v[(i + 1) % 3];
    shape.psi[i] = canonical_angle(std::atan2(-edge.x(), edge.y()));
    perimeter += edge.norm();
  }
  shape.inradius = 2.0 * area / perimeter;
  return shape;
}

void TriangleShape::validate() const {
  if (!(inradius > 0.0)) {
    throw Error(ErrorKind::DegenerateShape, "inradius must be positive");
  }
  double total = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double gap = canonical_angle(psi[(i + 1) % 3] - psi[i]);
    if (gap < 1e-12 || gap >= kPi - 1e-12) {
      std::ostringstream os;
      os << "normal gap " << gap << " between sides " << i + 1 << " and " << (i + 1) % 3 + 1
         << " must lie in (0, pi)";
      throw Error(ErrorKind::DegenerateShape, os.str());
    }
    total += gap;
  }
  if (std::abs(total - kTwoPi) > 1e-9) {
    throw Error(ErrorKind::DegenerateShape, "normals are not ordered counterclockwise");
  }
}

CircumTriangle circumscribe(const SupportFunction2D& h, const TriangleShape& shape, double rotation) {
  shape.validate();
  CircumTriangle out;
  out.rotation = rotation;
  std::array<Vec2, 3> normals;
  Eigen::Matrix3d system;
  Eigen::Vector3d rhs;
  for (int i = 0; i < 3; ++i) {
    const double angle = shape.psi[i] + rotation;
    normals[i] = unit(angle);
    out.lines[i] = {canonical_angle(angle), h.value(angle)};
    system.row(i) << normals[i].x(), normals[i].y(), 1.0;
    rhs(i) = out.lines[i].offset;
  }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    out.vertices[i] = intersect_lines(normals[j], out.lines[j].offset, normals[k], out.lines[k].offset);
  }
  const double det = system.determinant();
  if (std::abs(det) < 1e-12) {
    throw Error(ErrorKind::DegenerateShape, "incenter system is singular");
  }
  const Eigen::Vector3d sol = system.partialPivLu().solve(rhs);
  out.incenter = {sol(0), sol(1)};
  out.inradius = sol(2);
  return out;
}

std::vector<double> rotation_grid(int samples) {
  std::vector<double> out(static_cast<std::size_t>(std::max(samples, 0)));
  for (int i = 0; i < samples; ++i) out[i] = kTwoPi * i / samples;
  return out;
}

RotorCheck is_rotor(const SupportFunction2D& h, const TriangleShape& shape, int samples, double tol) {
  if (samples < 3) throw Error(ErrorKind::InvalidInput, "rotor check needs at least 3 samples");
  require_convex(h);
  RotorCheck out;
  for (double rho : rotation_grid(samples)) {
    const auto tri = circumscribe(h, shape, rho);
    out.max_defect = std::max(out.max_defect, std::abs(tri.inradius - shape.inradius));
  }
  out.ok = out.max_defect <= tol;
  return out;
}

SupportFunction2D equilateral_rotor(double c0, const std::vector<Harmonic>& harmonics) {
  for (const auto& hk : harmonics) {
    if (hk.k % 3 == 0) {
      throw Error(ErrorKind::ForbiddenHarmonic,
                  "order " + std::to_string(hk.k) + " is a multiple of 3 and changes the inradius");
    }
  }
  SupportFunction2D h(c0, harmonics);
  require_convex(h);
  return h;
}

ContactData contact_data(const SupportFunction2D& h, const TriangleShape& shape, double rotation,
                         double concurrency_tol) {
  const auto tri = circumscribe(h, shape, rotation);
  ContactData cd;
  cd.rotation = rotation;
  cd.vertices = tri.vertices;
  std::array<Vec2, 3> normals;
  for (int i = 0; i < 3; ++i) {
    const double angle = shape.psi[i] + rotation;
    cd.normal_angle[i] = canonical_angle(angle);
    cd.x[i] = boundary_point(h, angle);
    cd.kappa[i] = 1.0 / curvature_radius(h, angle);
    normals[i] = unit(angle);
  }
  const auto conc = concurrence_point(cd.x, normals);
  cd.center = conc.point;
  cd.concurrency_residual = conc.residual;
  if (conc.residual > concurrency_tol * shape.inradius) {
    std::ostringstream os;
    os << "contact normals miss their least-squares common point by " << conc.residual
       << " at rotation " << rotation << " (tolerance " << concurrency_tol * shape.inradius << ")";
    throw Error(ErrorKind::NotConcurrent, os.str());
  }
  for (int i = 0; i < 3; ++i) cd.r[i] = (cd.x[i] - cd.center).norm();

  const double min_area = 1e-12 * shape.inradius * shape.inradius;
  cd.a = barycentric(cd.center, tri.vertices, min_area, ErrorKind::DegenerateShape);
  cd.b = barycentric(cd.center, cd.x, min_area, ErrorKind::DegenerateContacts);
  return cd;
}

double curvature_identity_residual(const ContactData& cd) {
  const double r_max = *std::max_element(cd.r.begin(), cd.r.end());
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (!(cd.r[i] > 1e-12 * r_max) || !(cd.kappa[i] > 0.0)) {
      throw Error(ErrorKind::DegenerateContacts,
                  "contact " + std::to_string(i + 1) + " coincides with the normal concurrence point");
    }
    sum += cd.a[i] / (cd.kappa[i] * cd.r[i]);
  }
  return sum - 1.0;
}

double duality_check(const ContactData& cd) {
  double norm = 0.0;
  for (int i = 0; i < 3; ++i) norm += cd.b[i] * cd.r[i] * cd.r[i];
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    worst = std::max(worst, std::abs(cd.a[i] - cd.b[i] * cd.r[i] * cd.r[i] / norm));
  }
  return worst;
}

}  // namespace rotors
