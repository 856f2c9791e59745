#pragma once

#include <array>
#include <vector>

#include "rotors/support2d.hpp"

namespace rotors {

/**
 * Triangle described by the outward normal directions of its sides
 * (counterclockwise) and its inradius. Side i is opposite vertex A_i.
 */
struct TriangleShape {
  std::array<double, 3> psi{};
  double inradius = 1.0;

  /// Normals pi/2, 7pi/6, 11pi/6.
  static TriangleShape equilateral(double inradius = 1.0);
  /// From counterclockwise vertices; side i is A_{i+1} A_{i+2}.
  static TriangleShape from_vertices(const Vec2& a1, const Vec2& a2, const Vec2& a3);

  /// Throws DegenerateShape unless the normals are distinct, ordered
  /// counterclockwise and positively span the plane.
  void validate() const;

  bool operator==(const TriangleShape&) const = default;
};

struct SupportLine {
  double angle = 0.0;
  double offset = 0.0;
};

/// The triangle with the normals of T rotated by `rotation`, every side
/// tangent to the body.
struct CircumTriangle {
  double rotation = 0.0;
  std::array<SupportLine, 3> lines{};
  std::array<Vec2, 3> vertices{};
  Vec2 incenter = Vec2::Zero();
  double inradius = 0.0;
};

CircumTriangle circumscribe(const SupportFunction2D& h, const TriangleShape& shape, double rotation);

struct RotorCheck {
  bool ok = false;
  double max_defect = 0.0;
};

constexpr int kDefaultRotorSamples = 3600;

/// Max |inradius(rho) - T.inradius| over `samples` uniform rotations.
RotorCheck is_rotor(const SupportFunction2D& h, const TriangleShape& shape,
                    int samples = kDefaultRotorSamples, double tol = 1e-10);

/// Body with the given harmonics, a rotor of every equilateral triangle of
/// inradius c0. Harmonic orders divisible by 3 are rejected (ForbiddenHarmonic).
SupportFunction2D equilateral_rotor(double c0, const std::vector<Harmonic>& harmonics);

/**
 * Contact configuration of a body inside its circumscribed triangle.
 * Index i follows the side convention: x[i] is on the side opposite A_i.
 */
struct ContactData {
  double rotation = 0.0;
  std::array<double, 3> normal_angle{};
  std::array<Vec2, 3> x{};
  std::array<double, 3> kappa{};
  Vec2 center = Vec2::Zero();  ///< concurrence point O of the contact normals
  double concurrency_residual = 0.0;
  std::array<double, 3> r{};
  std::array<double, 3> a{};  ///< barycentric coordinates of O w.r.t. A_1 A_2 A_3
  std::array<double, 3> b{};  ///< barycentric coordinates of O w.r.t. x_1 x_2 x_3
  std::array<Vec2, 3> vertices{};
};

/// Relative tolerance (times T.inradius) on the distance from O to each normal.
constexpr double kConcurrencyTol = 1e-7;

ContactData contact_data(const SupportFunction2D& h, const TriangleShape& shape, double rotation,
                         double concurrency_tol = kConcurrencyTol);

/// a_1/(k_1 r_1) + a_2/(k_2 r_2) + a_3/(k_3 r_3) - 1; vanishes for rotors.
double curvature_identity_residual(const ContactData& cd);

/// max_i |a_i - b_i r_i^2 / sum_j b_j r_j^2|.
double duality_check(const ContactData& cd);

/// Uniform rotations k * 2pi / samples.
std::vector<double> rotation_grid(int samples);

}  // namespace rotors
