#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "rotors/lines3d.hpp"

namespace rotors {

using Quat = Eigen::Quaterniond;

struct ShTerm {
  int l = 1;
  int m = 0;
  double coeff = 0.0;

  bool operator==(const ShTerm&) const = default;
};

/// Support value, tangential gradient and the full Hessian of the degree-one
/// homogeneous extension |x| h(x / |x|) at a unit vector.
struct SupportEval3 {
  double value = 0.0;
  Vec3 grad = Vec3::Zero();
  Eigen::Matrix3d hessian = Eigen::Matrix3d::Zero();

  /// h n + grad: the boundary point with outward normal n.
  Vec3 contact(const Vec3& n) const { return value * n + grad; }
  /// Smallest eigenvalue of the Hessian on the tangent plane at n
  /// (h I + spherical Hessian of h).
  double convexity_margin(const Vec3& n) const;
};

/**
 * Support function on the unit sphere, c0 plus real orthonormal spherical
 * harmonic terms of degree 1..kMaxDegree. Degree-one terms translate the body.
 */
class SupportFunction3D {
 public:
  SupportFunction3D() = default;
  explicit SupportFunction3D(double c0, std::vector<ShTerm> terms = {});

  static SupportFunction3D sphere(double radius, const Vec3& center = Vec3::Zero());

  double c0() const { return c0_; }
  const std::vector<ShTerm>& terms() const { return terms_; }
  int max_degree() const;

  SupportEval3 eval(const Vec3& n) const;
  double value(const Vec3& n) const { return eval(n).value; }

  SupportFunction3D translated(const Vec3& t) const;
  SupportFunction3D scaled(double s) const;

  bool operator==(const SupportFunction3D&) const = default;

 private:
  double c0_ = 0.0;
  std::vector<ShTerm> terms_;
};

/// Value and tangential gradient; throws NotUnit unless |n| = 1 to 1e-12.
std::pair<double, Vec3> eval_support3(const SupportFunction3D& h, const Vec3& n);

/// Boundary point touching the support plane with normal n; throws
/// ConvexityViolation when the convexity margin at n is not positive.
Vec3 contact_point3(const SupportFunction3D& h, const Vec3& n);

/// Vertices of an icosahedron subdivided `level` times, projected to the
/// sphere (10 * 4^level + 2 nodes).
std::vector<Vec3> icosphere(int level);

struct ConvexityReport3 {
  bool ok = false;
  double min_margin = 0.0;
  Vec3 argmin = Vec3::UnitZ();
  int nodes = 0;
};

/// Convexity margin over an icosphere; ok iff the margin stays at or above
/// 1e-6 * c0 everywhere (level 4 gives 2562 nodes).
ConvexityReport3 validate_convex3(const SupportFunction3D& h, int level = 4);

struct TetrahedronShape {
  std::array<Vec3, 4> nu{};
  double inradius = 1.0;

  /// Outward normals (+-1, +-1, +-1)/sqrt(3) with an even number of minus signs.
  static TetrahedronShape regular(double inradius = 1.0);

  /// Throws DegenerateShape unless nu are unit vectors that positively span
  /// space.
  void validate() const;

  bool operator==(const TetrahedronShape&) const = default;
};

struct Plane {
  Vec3 normal = Vec3::UnitZ();
  double offset = 0.0;
};

struct CircumTetra {
  Quat rotation = Quat::Identity();
  std::array<Plane, 4> planes{};
  /// Vertex i is opposite face i.
  std::array<Vec3, 4> vertices{};
  double volume = 0.0;
  std::array<Vec3, 4> contacts{};
  std::array<PlueckerLine, 4> normals{};
};

CircumTetra circum_tetra(const SupportFunction3D& h, const TetrahedronShape& shape, const Quat& rotation);

/// Deterministic low-discrepancy rotations: a Halton sequence in bases
/// 2, 3, 5 with a seeded Cranley-Patterson shift, mapped to unit quaternions.
std::vector<Quat> rotation_samples(int count, std::uint64_t seed);

struct RotorDefect {
  double max_defect = 0.0;
  double mean_volume = 0.0;
};

/// max_rho |V(rho) - mean V| / mean V over sampled rotations.
RotorDefect rotor_defect(const SupportFunction3D& h, const TetrahedronShape& shape, int samples,
                         std::uint64_t seed);

struct SweepRow {
  int index = 0;
  Quat rotation = Quat::Identity();
  double volume = 0.0;
  std::array<double, 4> singular_values{};
  double sigma_ratio = 0.0;
  Verdict verdict = Verdict::NotGeneric;
};

/// Circumscribes at every sampled rotation and classifies the four contact
/// normal lines.
std::vector<SweepRow> rotor_sweep(const SupportFunction3D& h, const TetrahedronShape& shape,
                                  int samples, std::uint64_t seed, double rank_tol = kDefaultRankTol);

constexpr double kRotorTol = 1e-8;

struct NormalRulingReport {
  bool is_rotor = false;
  double rotor_defect = 0.0;
  double worst_sigma_ratio = 0.0;
  /// Counts indexed by Verdict.
  std::array<int, 4> histogram{};
  /// Rotations skipped because two contact normals were parallel.
  int skipped = 0;
  int samples = 0;
};

/**
 * For a rotor (volume defect at most rotor_tol), checks that at every sampled
 * rotation the four contact normal lines generically belong to one ruling.
 * A non-rotor input is reported through is_rotor = false without sweeping.
 */
NormalRulingReport normal_ruling_check(const SupportFunction3D& h, const TetrahedronShape& shape,
                                       int samples, double rank_tol, std::uint64_t seed,
                                       double rotor_tol = kRotorTol);

struct RotorSearchOptions {
  /// Rotations per objective evaluation during the search.
  int inner_samples = 200;
  /// Rotations used to report the final defect.
  int final_samples = 1000;
  /// Coefficients start uniformly in [-initial_scale, initial_scale] * inradius.
  double initial_scale = 0.02;
  double convexity_floor = 0.05;
};

struct RotorSearchResult {
  SupportFunction3D h;
  double defect = 0.0;
  int evaluations = 0;
};

/// Nelder-Mead search over the coefficients of `basis` (degrees >= 1) for a
/// support function with constant circumscribed volume; c0 is fixed to the
/// inradius. Best effort: the result is returned with its defect.
RotorSearchResult search_rotor(const TetrahedronShape& shape, const std::vector<std::pair<int, int>>& basis,
                               int steps, std::uint64_t seed, const RotorSearchOptions& options = {});

/// All (l, m) with l in `degrees`.
std::vector<std::pair<int, int>> harmonic_basis(const std::vector<int>& degrees);

}  // namespace rotors
