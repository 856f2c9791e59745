#include "rotors/sliding.hpp"

#include <algorithm>

#include <Eigen/Dense>
#include <sstream>

#include "rotors/error.hpp"

namespace rotors {

namespace {

constexpr double kParallelTol = 1e-12;
constexpr double kFrameTol = 1e-8;

void require_transversal(const FramedCurve& first, const FramedCurve& second) {
  if (std::abs(std::sin(first.theta0() - second.theta0())) < kParallelTol) {
    std::ostringstream os;
    os << "frame normals " << first.theta0() << " and " << second.theta0() << " are parallel";
    throw Error(ErrorKind::ParallelNormals, os.str());
  }
}

Eigen::Matrix2d normal_rows(double theta1, double theta2, double t) {
  Eigen::Matrix2d m;
  m.row(0) = unit(theta1 + t).transpose();
  m.row(1) = unit(theta2 + t).transpose();
  return m;
}

}  // namespace

Vec2 solve_sliding(const FramedCurve& first, const FramedCurve& second, double t) {
  require_transversal(first, second);
  const Eigen::Matrix2d m = normal_rows(first.theta0(), second.theta0(), t);
  const Vec2 rhs{first.support(t).value - first.support(0.0).value,
                 second.support(t).value - second.support(0.0).value};
  return m.partialPivLu().solve(rhs);
}

SlidingFamily::SlidingFamily(FramedCurve first, FramedCurve second, double epsilon, int sample_count)
    : first_(std::move(first)), second_(std::move(second)), epsilon_(epsilon) {
  require_transversal(first_, second_);
  if (!(epsilon_ > 0.0)) throw Error(ErrorKind::InvalidInput, "sliding half-width must be positive");
  for (const FramedCurve* fc : {&first_, &second_}) {
    const auto p = fc->support(0.0);
    if (std::abs(p.d1) > kFrameTol * std::max(std::abs(p.value), 1.0)) {
      std::ostringstream os;
      os << "frame at theta0 = " << fc->theta0() << " has P'(0) = " << p.d1
         << "; its normal misses the common origin";
      throw Error(ErrorKind::NotConcurrent, os.str());
    }
  }
  const double scale = std::max({first_.origin().norm(), std::abs(first_.support(0.0).value), 1.0});
  if ((first_.origin() - second_.origin()).norm() > kFrameTol * scale) {
    throw Error(ErrorKind::NotConcurrent, "the two frames have different origins");
  }
  sample_count = std::max(sample_count, 3);
  params_.resize(sample_count);
  samples_.resize(sample_count);
  for (int i = 0; i < sample_count; ++i) {
    params_[i] = -epsilon_ + 2.0 * epsilon_ * i / (sample_count - 1);
    samples_[i] = translation(params_[i]);
  }
}

Vec2 SlidingFamily::translation(double t) const { return solve_sliding(first_, second_, t); }

TranslationJet SlidingFamily::translation_jet(double t) const {
  const double th1 = first_.theta0();
  const double th2 = second_.theta0();
  const Eigen::Matrix2d m = normal_rows(th1, th2, t);
  Eigen::Matrix2d dm;
  dm.row(0) = unit_perp(th1 + t).transpose();
  dm.row(1) = unit_perp(th2 + t).transpose();
  const Eigen::Matrix2d ddm = -m;

  const auto p1 = first_.support(t);
  const auto p2 = second_.support(t);
  const Vec2 g{p1.value - first_.support(0.0).value, p2.value - second_.support(0.0).value};
  const Vec2 dg{p1.d1, p2.d1};
  const Vec2 ddg{p1.d2, p2.d2};

  const auto lu = m.partialPivLu();
  TranslationJet out;
  out.f = lu.solve(g);
  out.d1 = lu.solve(dg - dm * out.f);
  out.d2 = lu.solve(ddg - 2.0 * dm * out.d1 - ddm * out.f);
  return out;
}

Vec2 SlidingFamily::apply(double t, const Vec2& x) const {
  const double c = std::cos(t);
  const double s = std::sin(t);
  return Vec2{c * x.x() - s * x.y(), s * x.x() + c * x.y()} + translation(t);
}

SlidingDerivatives sliding_derivatives(const SlidingFamily& family, double step) {
  if (!(step > 0.0) || !(5.0 * step < family.epsilon())) {
    throw Error(ErrorKind::InvalidInput, "finite-difference step must satisfy 0 < 5 step < epsilon");
  }
  auto f = [&](double t) { return family.translation(t); };
  const Vec2 f0 = f(0.0);
  auto first = [&](double s) -> Vec2 { return (f(s) - f(-s)) / (2.0 * s); };
  auto second = [&](double s) -> Vec2 { return (f(s) - 2.0 * f0 + f(-s)) / (s * s); };
  SlidingDerivatives out;
  out.f0 = f0;
  out.f1 = (4.0 * first(step) - first(2.0 * step)) / 3.0;
  out.f2 = (4.0 * second(step) - second(2.0 * step)) / 3.0;
  return out;
}

FramedCurve envelope_third_line(const SlidingFamily& family, double theta3, double r3) {
  if (std::abs(r3) < 1e-12) {
    throw Error(ErrorKind::OriginOnLine, "the third line passes through the sliding origin");
  }
  auto source = [family, theta3, r3](double t) {
    const auto jet = family.translation_jet(t);
    const Vec2 u = unit(theta3 + t);
    const Vec2 up = unit_perp(theta3 + t);
    SupportJet p;
    p.value = r3 + jet.f.dot(u);
    p.d1 = jet.d1.dot(u) + jet.f.dot(up);
    p.d2 = jet.d2.dot(u) + 2.0 * jet.d1.dot(up) - jet.f.dot(u);
    return p;
  };
  return FramedCurve(FramedCurve::Source(source), theta3, family.first().origin());
}

double curvature_from_sliding(const SlidingFamily& family, const Vec2& x, double r, double step) {
  if (!(r > 1e-12)) {
    throw Error(ErrorKind::DegenerateContacts, "contact coincides with the sliding origin");
  }
  const auto d = sliding_derivatives(family, step);
  return r + d.f2.dot(x) / r;
}

std::vector<SlidingTraceRow> sliding_trace(const SlidingFamily& family, const FramedCurve& third) {
  std::vector<SlidingTraceRow> rows;
  const auto& params = family.sample_parameters();
  const auto& fs = family.sample_translations();
  rows.reserve(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double t = params[i];
    rows.push_back({t, fs[i],
                    {family.first().support(t).value, family.second().support(t).value,
                     third.support(t).value}});
  }
  return rows;
}

}  // namespace rotors
