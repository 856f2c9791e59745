#pragma once

#include <array>
#include <vector>

#include "rotors/support2d.hpp"

namespace rotors {

/// f, f', f'' at one parameter value.
struct TranslationJet {
  Vec2 f = Vec2::Zero();
  Vec2 d1 = Vec2::Zero();
  Vec2 d2 = Vec2::Zero();
};

constexpr double kDefaultSlidingEpsilon = 0.2;

/**
 * The one-parameter family of rigid motions L_t(x) = R_t x + f(t) that keeps
 * the frame lines of two framed curves tangent to their curves. Both frames
 * share the origin, which must be the common point of their normals.
 *
 * f(t) solves the 2x2 system <f, u(theta_i + t)> = P_i(t) - P_i(0).
 */
class SlidingFamily {
 public:
  SlidingFamily(FramedCurve first, FramedCurve second, double epsilon = kDefaultSlidingEpsilon,
                int sample_count = 81);

  const FramedCurve& first() const { return first_; }
  const FramedCurve& second() const { return second_; }
  double epsilon() const { return epsilon_; }

  /// Translation part at parameter t.
  Vec2 translation(double t) const;
  /// f and its first two derivatives from differentiating the linear system.
  TranslationJet translation_jet(double t) const;

  /// Image of a point under L_t.
  Vec2 apply(double t, const Vec2& x) const;

  /// Uniform samples of t over [-epsilon, epsilon] with f(t).
  const std::vector<double>& sample_parameters() const { return params_; }
  const std::vector<Vec2>& sample_translations() const { return samples_; }

 private:
  FramedCurve first_;
  FramedCurve second_;
  double epsilon_;
  std::vector<double> params_;
  std::vector<Vec2> samples_;
};

/// Solves for f(t) directly from two frames (ParallelNormals if their
/// normals are parallel).
Vec2 solve_sliding(const FramedCurve& first, const FramedCurve& second, double t);

struct SlidingDerivatives {
  Vec2 f0 = Vec2::Zero();
  Vec2 f1 = Vec2::Zero();
  Vec2 f2 = Vec2::Zero();
};

/// f(0) exactly, f'(0) and f''(0) by central differences with one Richardson
/// step. Requires 5 * step < epsilon.
SlidingDerivatives sliding_derivatives(const SlidingFamily& family, double step);

/// Envelope of the lines L_t(lambda_3), where lambda_3 = {<x, u(theta3)> = r3}.
/// Its local support is P_3(t) = r3 + <f(t), u(theta3 + t)>. Throws
/// OriginOnLine when |r3| is negligible.
FramedCurve envelope_third_line(const SlidingFamily& family, double theta3, double r3);

/// Radius of curvature predicted at contact x (frame coordinates, |x| = r):
/// r + <f''(0), x> / r.
double curvature_from_sliding(const SlidingFamily& family, const Vec2& x, double r, double step);

struct SlidingTraceRow {
  double t = 0.0;
  Vec2 f = Vec2::Zero();
  std::array<double, 3> support{};
};

/// Sampled trajectory with the supports of both frames and of the envelope.
std::vector<SlidingTraceRow> sliding_trace(const SlidingFamily& family, const FramedCurve& third);

}  // namespace rotors
