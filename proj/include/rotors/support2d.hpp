#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

namespace rotors {

using Vec2 = Eigen::Vector2d;

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

/// Maps an angle to [0, 2pi).
double canonical_angle(double theta);

/// u(theta) = (cos theta, sin theta).
inline Vec2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }
/// u'(theta) = (-sin theta, cos theta).
inline Vec2 unit_perp(double theta) { return {-std::sin(theta), std::cos(theta)}; }

/// 2D cross product (z component).
inline double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

struct Harmonic {
  int k = 1;
  double a = 0.0;
  double b = 0.0;

  bool operator==(const Harmonic&) const = default;
};

/// Value and first two derivatives of a support function at one angle.
struct SupportJet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/**
 * Support function of a planar convex body as a trigonometric polynomial
 *
 *   h(theta) = c0 + sum_k (a_k cos k theta + b_k sin k theta).
 *
 * Harmonics are kept sorted by k with duplicates merged. The k = 1 terms are
 * a translation of the body by (a_1, b_1).
 */
class SupportFunction2D {
 public:
  SupportFunction2D() = default;
  explicit SupportFunction2D(double c0, std::vector<Harmonic> harmonics = {});

  static SupportFunction2D circle(double radius, const Vec2& center = Vec2::Zero());

  double c0() const { return c0_; }
  const std::vector<Harmonic>& harmonics() const { return harmonics_; }

  double value(double theta) const;
  /// n-th derivative in theta, n >= 0.
  double derivative(double theta, int order) const;
  SupportJet jet(double theta) const;

  /// Support of the body rotated by delta about the origin: h(theta - delta).
  SupportFunction2D rotated(double delta) const;
  /// Support of the body translated by t.
  SupportFunction2D translated(const Vec2& t) const;
  SupportFunction2D scaled(double s) const;

  /// c0 - sum_k (k^2 - 1) sqrt(a_k^2 + b_k^2); a positive value certifies
  /// h + h'' > 0 everywhere.
  double harmonic_bound() const;

  bool operator==(const SupportFunction2D&) const = default;

 private:
  double c0_ = 0.0;
  std::vector<Harmonic> harmonics_;
};

SupportJet eval_support(const SupportFunction2D& h, double theta);

/// Boundary point with outward normal u(theta): h u + h' u'.
/// Throws ConvexityViolation if h + h'' <= 0 at theta.
Vec2 boundary_point(const SupportFunction2D& h, double theta);

/// Radius of curvature h + h'' at the boundary point with normal u(theta).
double curvature_radius(const SupportFunction2D& h, double theta);

struct ConvexityReport {
  bool ok = false;
  double min_radius = 0.0;
  double argmin = 0.0;
  double harmonic_bound = 0.0;
};

constexpr int kDefaultConvexityGrid = 3600;

/// Scans h + h'' on a uniform grid and polishes the smallest sample with
/// Newton steps. ok iff the minimum is positive.
ConvexityReport validate_convex(const SupportFunction2D& h, int grid_size = kDefaultConvexityGrid);

/// Throws ConvexityViolation unless validate_convex succeeds.
void require_convex(const SupportFunction2D& h, int grid_size = kDefaultConvexityGrid);

/**
 * A boundary arc together with its tangent line at parameter 0, expressed in
 * a frame whose origin lies on the normal through the base point. The local
 * support P(t) is the support of the body in direction theta0 + t, so that
 *
 *   alpha(t) = P(t) u(theta0 + t) + P'(t) u'(theta0 + t),   P'(0) = 0.
 *
 * P is either a trigonometric body (exact derivatives) or any other smooth
 * source, e.g. an envelope produced by a sliding family.
 */
class FramedCurve {
 public:
  using Source = std::function<SupportJet(double)>;

  FramedCurve(SupportFunction2D local_body, double theta0, Vec2 origin);
  FramedCurve(Source support, double theta0, Vec2 origin);

  double theta0() const { return theta0_; }
  /// Frame origin in the coordinates of the body the curve was built from.
  const Vec2& origin() const { return origin_; }
  /// Body in frame coordinates, when the curve is trigonometric.
  const std::optional<SupportFunction2D>& body() const { return body_; }

  SupportJet support(double t) const { return support_(t); }
  Vec2 point(double t) const;
  Vec2 base_point() const { return point(0.0); }
  double radius_of_curvature(double t) const;

 private:
  Source support_;
  std::optional<SupportFunction2D> body_;
  double theta0_ = 0.0;
  Vec2 origin_ = Vec2::Zero();
};

/// Frame at the boundary point with normal u(theta0), re-centered along the
/// tangent so that P'(0) = 0 holds exactly.
FramedCurve make_framed_curve(const SupportFunction2D& h, double theta0);

/// Frame with origin at a given point that must lie on the normal line at
/// the boundary point with normal u(theta0) (NotConcurrent otherwise).
FramedCurve make_framed_curve_about(const SupportFunction2D& h, double theta0, const Vec2& origin,
                                    double tol = 1e-7);

}  // namespace rotors
