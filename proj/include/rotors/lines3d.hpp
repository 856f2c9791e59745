#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace rotors {

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;

/// Line as (unit direction; moment) with m = p x d for any point p on it.
struct PlueckerLine {
  Vec3 d = Vec3::UnitX();
  Vec3 m = Vec3::Zero();

  Vec6 coords() const {
    Vec6 v;
    v << d, m;
    return v;
  }
  /// Point of the line closest to the origin.
  Vec3 foot() const { return d.cross(m); }
  double distance_to(const Vec3& x) const { return (x.cross(d) - m).norm(); }
};

/// Throws ZeroDirection for a vanishing direction.
PlueckerLine pluecker(const Vec3& point, const Vec3& direction);

/// <d1, m2> + <d2, m1>; zero iff the lines are coplanar.
double klein_form(const PlueckerLine& l1, const PlueckerLine& l2);

constexpr double kDefaultRankTol = 1e-8;
constexpr double kDefaultClassifyTol = 1e-7;

/**
 * Rank of four lines' Plücker vectors.
 *
 * The vectors are first brought to a canonical frame: moments are taken about
 * the least-squares common point of the lines and divided by the largest
 * resulting moment (when that is not negligible), so singular-value ratios do
 * not depend on the placement or size of the configuration.
 */
struct RuledRank {
  int rank = 0;
  std::array<double, 4> singular_values{};
  double sigma_ratio = 0.0;  ///< sigma_4 / sigma_1
  Vec3 center = Vec3::Zero();
  double length = 1.0;
  /// Right singular vectors of the three largest singular values.
  Eigen::Matrix<double, 6, 3> span;
};

/// Throws DirectionsDependent when two directions are parallel. `scale` is a
/// lower bound for the characteristic length; pass the size of the underlying
/// geometry when all lines may pass close to the origin.
RuledRank ruled_rank(std::span<const PlueckerLine, 4> lines, double rank_tol = kDefaultRankTol,
                     double scale = 0.0);

enum class Verdict { Concurrent, Regulus, PairwisePlanes, NotGeneric };

std::string_view to_string(Verdict v);

/// Two meeting pairs {first, second} with their intersection points.
struct PairMatching {
  std::array<int, 2> first{};
  std::array<int, 2> second{};
  Vec3 p = Vec3::Zero();
  Vec3 q = Vec3::Zero();
};

struct RulingClassification {
  Verdict verdict = Verdict::NotGeneric;
  RuledRank rank;
  std::optional<Vec3> common_point;
  std::vector<PairMatching> matchings;
  /// Basis of the 3-space cutting the Klein quadric in the regulus
  /// (canonical-frame coordinates, see RuledRank).
  std::optional<Eigen::Matrix<double, 6, 3>> regulus_basis;
};

/**
 * Decides whether four pairwise non-parallel lines generically belong to one
 * ruling of a quadric: concurrent, in one regulus, or two meeting pairs whose
 * planes meet along the line through the two meeting points.
 *
 * `tol` is relative to the characteristic length of the configuration (the
 * largest of the moment norms and the distance of the common point from the
 * origin, floored at `scale`).
 */
RulingClassification classify_ruling(std::span<const PlueckerLine, 4> lines,
                                     double tol = kDefaultClassifyTol,
                                     double rank_tol = kDefaultRankTol, double scale = 0.0);

/// Least-squares point closest to all lines and its largest distance to them.
std::pair<Vec3, double> common_point(std::span<const PlueckerLine> lines);

}  // namespace rotors
