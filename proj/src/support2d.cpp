#include "rotors/support2d.hpp"

#include <algorithm>
#include <sstream>

#include "rotors/error.hpp"

namespace rotors {

double canonical_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

SupportFunction2D::SupportFunction2D(double c0, std::vector<Harmonic> harmonics) : c0_(c0) {
  for (const auto& hk : harmonics) {
    if (hk.k < 1) {
      throw Error(ErrorKind::InvalidInput,
                  "harmonic order must be a positive integer, got " + std::to_string(hk.k));
    }
  }
  std::stable_sort(harmonics.begin(), harmonics.end(),
                   [](const Harmonic& l, const Harmonic& r) { return l.k < r.k; });
  for (const auto& hk : harmonics) {
    if (!harmonics_.empty() && harmonics_.back().k == hk.k) {
      harmonics_.back().a += hk.a;
      harmonics_.back().b += hk.b;
    } else {
      harmonics_.push_back(hk);
    }
  }
}

SupportFunction2D SupportFunction2D::circle(double radius, const Vec2& center) {
  if (center.isZero(0.0)) return SupportFunction2D(radius);
  return SupportFunction2D(radius, {{1, center.x(), center.y()}});
}

double SupportFunction2D::value(double theta) const { return derivative(theta, 0); }

double SupportFunction2D::derivative(double theta, int order) const {
  // d^n/dtheta^n of (a cos k t + b sin k t) cycles through the four phases.
  double sum = order == 0 ? c0_ : 0.0;
  for (const auto& [k, a, b] : harmonics_) {
    const double c = std::cos(k * theta);
    const double s = std::sin(k * theta);
    const double scale = std::pow(static_cast<double>(k), order);
    double term = 0.0;
    switch (order % 4) {
      case 0: term = a * c + b * s; break;
      case 1: term = -a * s + b * c; break;
      case 2: term = -a * c - b * s; break;
      case 3: term = a * s - b * c; break;
    }
    sum += scale * term;
  }
  return sum;
}

SupportJet SupportFunction2D::jet(double theta) const {
  SupportJet j{c0_, 0.0, 0.0};
  for (const auto& [k, a, b] : harmonics_) {
    const double c = std::cos(k * theta);
    const double s = std::sin(k * theta);
    const double kk = static_cast<double>(k);
    const double v = a * c + b * s;
    j.value += v;
    j.d1 += kk * (-a * s + b * c);
    j.d2 -= kk * kk * v;
  }
  return j;
}

SupportFunction2D SupportFunction2D::rotated(double delta) const {
  std::vector<Harmonic> out;
  out.reserve(harmonics_.size());
  for (const auto& [k, a, b] : harmonics_) {
    const double c = std::cos(k * delta);
    const double s = std::sin(k * delta);
    out.push_back({k, a * c - b * s, a * s + b * c});
  }
  return SupportFunction2D(c0_, std::move(out));
}

SupportFunction2D SupportFunction2D::translated(const Vec2& t) const {
  auto out = harmonics_;
  out.push_back({1, t.x(), t.y()});
  return SupportFunction2D(c0_, std::move(out));
}

SupportFunction2D SupportFunction2D::scaled(double s) const {
  auto out = harmonics_;
  for (auto& hk : out) {
    hk.a *= s;
    hk.b *= s;
  }
  return SupportFunction2D(c0_ * s, std::move(out));
}

double SupportFunction2D::harmonic_bound() const {
  double bound = c0_;
  for (const auto& [k, a, b] : harmonics_) {
    bound -= (static_cast<double>(k) * k - 1.0) * std::hypot(a, b);
  }
  return bound;
}

SupportJet eval_support(const SupportFunction2D& h, double theta) { return h.jet(theta); }

namespace {

[[noreturn]] void throw_convexity(double theta, double radius) {
  std::ostringstream os;
  os << "h + h'' = " << radius << " <= 0 at theta = " << theta;
  throw Error(ErrorKind::ConvexityViolation, os.str());
}

}  // namespace

Vec2 boundary_point(const SupportFunction2D& h, double theta) {
  const auto j = h.jet(theta);
  if (j.value + j.d2 <= 0.0) throw_convexity(theta, j.value + j.d2);
  return j.value * unit(theta) + j.d1 * unit_perp(theta);
}

double curvature_radius(const SupportFunction2D& h, double theta) {
  const auto j = h.jet(theta);
  const double radius = j.value + j.d2;
  if (radius <= 0.0) throw_convexity(theta, radius);
  return radius;
}

ConvexityReport validate_convex(const SupportFunction2D& h, int grid_size) {
  if (grid_size < 8) {
    throw Error(ErrorKind::InvalidInput, "convexity grid needs at least 8 points");
  }
  auto radius = [&](double t) { return h.derivative(t, 0) + h.derivative(t, 2); };

  ConvexityReport report;
  report.harmonic_bound = h.harmonic_bound();
  report.min_radius = radius(0.0);
  report.argmin = 0.0;
  for (int i = 1; i < grid_size; ++i) {
    const double t = kTwoPi * i / grid_size;
    const double r = radius(t);
    if (r < report.min_radius) {
      report.min_radius = r;
      report.argmin = t;
    }
  }

  // Newton on (h + h'')' = 0, kept inside the bracketing grid cell.
  const double cell = kTwoPi / grid_size;
  double t = report.argmin;
  for (int it = 0; it < 20; ++it) {
    const double g = h.derivative(t, 1) + h.derivative(t, 3);
    const double gg = h.derivative(t, 2) + h.derivative(t, 4);
    if (gg <= 0.0) break;
    const double next = t - g / gg;
    if (std::abs(next - report.argmin) > cell) break;
    const bool done = std::abs(next - t) < 1e-15;
    t = next;
    if (done) break;
  }
  const double polished = radius(t);
  if (polished < report.min_radius) {
    report.min_radius = polished;
    report.argmin = canonical_angle(t);
  }
  report.ok = report.min_radius > 0.0;
  return report;
}

void require_convex(const SupportFunction2D& h, int grid_size) {
  const auto report = validate_convex(h, grid_size);
  if (!report.ok) throw_convexity(report.argmin, report.min_radius);
}

FramedCurve::FramedCurve(SupportFunction2D local_body, double theta0, Vec2 origin)
    : body_(std::move(local_body)), theta0_(theta0), origin_(std::move(origin)) {
  support_ = [body = *body_, theta0](double t) { return body.jet(theta0 + t); };
}

FramedCurve::FramedCurve(Source support, double theta0, Vec2 origin)
    : support_(std::move(support)), theta0_(theta0), origin_(std::move(origin)) {}

Vec2 FramedCurve::point(double t) const {
  const auto p = support_(t);
  return p.value * unit(theta0_ + t) + p.d1 * unit_perp(theta0_ + t);
}

double FramedCurve::radius_of_curvature(double t) const {
  const auto p = support_(t);
  return p.value + p.d2;
}

FramedCurve make_framed_curve(const SupportFunction2D& h, double theta0) {
  curvature_radius(h, theta0);
  const Vec2 shift = h.derivative(theta0, 1) * unit_perp(theta0);
  return FramedCurve(h.translated(-shift), theta0, shift);
}

FramedCurve make_framed_curve_about(const SupportFunction2D& h, double theta0, const Vec2& origin,
                                    double tol) {
  curvature_radius(h, theta0);
  auto local = h.translated(-origin);
  const auto j = local.jet(theta0);
  const double scale = std::max({std::abs(j.value), std::abs(h.c0()), 1e-300});
  if (std::abs(j.d1) > tol * scale) {
    std::ostringstream os;
    os << "normal at theta = " << theta0 << " misses the frame origin by " << std::abs(j.d1);
    throw Error(ErrorKind::NotConcurrent, os.str());
  }
  return FramedCurve(std::move(local), theta0, origin);
}

}  // namespace rotors
