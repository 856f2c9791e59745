#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "rotors/support2d.hpp"

namespace rotors {

enum class Decision { Immobilizes, DoesNotImmobilize, Indeterminate };

std::string_view to_string(Decision d);

/// Three boundary contacts whose normals meet at `center`, with barycentric
/// coordinates taken w.r.t. the triangle of their support lines.
struct ImmobilizationContacts {
  std::array<double, 3> angles{};
  std::array<Vec2, 3> x{};
  std::array<double, 3> kappa{};
  std::array<double, 3> r{};
  std::array<double, 3> a{};
  std::array<Vec2, 3> vertices{};
  Vec2 center = Vec2::Zero();
  double concurrency_residual = 0.0;
};

struct ImmobilizationReport {
  double omega = 0.0;
  Decision decision = Decision::Indeterminate;
  ImmobilizationContacts contacts;
};

constexpr double kIndeterminateBand = 1e-6;

/**
 * omega = a_1 k_1 r_1 + a_2 k_2 r_2 + a_3 k_3 r_3 for the contacts with outward
 * normals u(angles[i]). Below 1 - band the points immobilize the body, above
 * 1 + band they do not.
 *
 * Throws NotConcurrent when the normals do not meet (relative tolerance
 * `concurrency_tol`), DegenerateShape when two support lines are parallel or
 * the normals do not positively span the plane.
 */
ImmobilizationReport omega(const SupportFunction2D& h, const std::array<double, 3>& angles,
                           double band = kIndeterminateBand, double concurrency_tol = 1e-7);

struct PenetrationOptions {
  double grid_radius = 1e-2;
  int grid_size = 21;
  /// Zoom levels of the translation search at each sampled rotation.
  int refine_levels = 8;
};

/**
 * Brute-force immobilization test. Samples rotations about the normal
 * concurrence point in [-grid_radius, grid_radius] and, for each, searches
 * translations in the disc of radius grid_radius with a zooming grid for a
 * motion leaving every contact outside or on the moved body. Returns true iff
 * no sampled nonzero motion avoids penetration.
 *
 * Penetration depth is measured exactly through the support function:
 * min over directions near the contact normal of h(theta) - <y, u(theta)>.
 */
bool penetration_oracle(const SupportFunction2D& h, const std::array<double, 3>& angles,
                        const PenetrationOptions& options = {});

/// Signed depth of y below the boundary patch whose normal is near `seed`
/// (positive inside).
double penetration_depth(const SupportFunction2D& h, const Vec2& y, double seed);

/// Angles theta at which the normal line of the body passes through `point`,
/// i.e. roots of h'(theta) - <point, u'(theta)>, sorted in [0, 2pi).
std::vector<double> concurrent_normal_angles(const SupportFunction2D& h, const Vec2& point,
                                             int grid = 3600);

/// Triples from concurrent_normal_angles whose normals are pairwise
/// non-parallel and positively span the plane.
std::vector<std::array<double, 3>> concurrent_triples(const SupportFunction2D& h, const Vec2& point,
                                                      int grid = 3600);

}  // namespace rotors
