#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rotors/error.hpp"
#include "rotors/support2d.hpp"

using namespace rotors;

namespace {

SupportFunction2D sample_body() { return SupportFunction2D(1.0, {{2, 0.05, -0.03}, {3, 0.02, 0.01}, {5, 0.0, 0.004}}); }

}  // namespace

TEST_CASE("harmonics are sorted and merged") {
  const SupportFunction2D h(1.0, {{3, 0.1, 0.0}, {2, 0.0, 0.2}, {3, 0.05, 0.1}});
  REQUIRE(h.harmonics().size() == 2);
  CHECK(h.harmonics()[0] == Harmonic{2, 0.0, 0.2});
  CHECK(h.harmonics()[1].a == doctest::Approx(0.15));
  CHECK(h.harmonics()[1].b == doctest::Approx(0.1));
  CHECK_THROWS_AS(SupportFunction2D(1.0, {{0, 1.0, 0.0}}), Error);
}

TEST_CASE("derivatives match finite differences") {
  const auto h = sample_body();
  for (double t = 0.0; t < 6.3; t += 0.37) {
    CHECK(h.derivative(t, 1) == doctest::Approx(oracle::d1(h, t)).epsilon(1e-8));
    CHECK(h.derivative(t, 2) == doctest::Approx(oracle::d2(h, t)).epsilon(1e-6));
    const double e = 1e-4;
    const double fd3 = (h.derivative(t + e, 2) - h.derivative(t - e, 2)) / (2 * e);
    CHECK(h.derivative(t, 3) == doctest::Approx(fd3).epsilon(1e-6));
  }
}

TEST_CASE("circle") {
  const auto h = SupportFunction2D::circle(2.0, {0.5, -1.0});
  for (double t = 0.0; t < 6.3; t += 0.5) {
    const Vec2 p = boundary_point(h, t);
    CHECK((p - Vec2(0.5, -1.0)).norm() == doctest::Approx(2.0));
    CHECK(curvature_radius(h, t) == doctest::Approx(2.0));
  }
}

TEST_CASE("boundary point is the maximizer of the support functional") {
  const auto h = sample_body();
  for (double t : {0.1, 1.3, 2.9, 4.4}) {
    const Vec2 p = boundary_point(h, t);
    const Vec2 q = oracle::argmax_contact(h, t);
    CHECK((p - q).norm() < 1e-4);
    CHECK(p.dot(unit(t)) == doctest::Approx(h.value(t)).epsilon(1e-12));
  }
}

TEST_CASE("boundary tangent is perpendicular to the normal") {
  const auto h = sample_body();
  for (double t = 0.0; t < 6.3; t += 0.3) {
    const double e = 1e-6;
    const Vec2 tangent = boundary_point(h, t + e) - boundary_point(h, t - e);
    CHECK(std::abs(tangent.dot(unit(t))) < 1e-10);
  }
}

TEST_CASE("rotation and translation") {
  const auto h = sample_body();
  const Vec2 shift(0.3, -0.7);
  const auto moved = h.translated(shift);
  const auto turned = h.rotated(0.4);
  for (double t = 0.0; t < 6.3; t += 0.41) {
    CHECK(moved.value(t) == doctest::Approx(h.value(t) + shift.dot(unit(t))));
    CHECK((boundary_point(moved, t) - boundary_point(h, t) - shift).norm() < 1e-12);
    CHECK(curvature_radius(moved, t) == doctest::Approx(curvature_radius(h, t)));
    CHECK(turned.value(t) == doctest::Approx(h.value(t - 0.4)));
  }
  CHECK(h.scaled(2.0).value(1.0) == doctest::Approx(2.0 * h.value(1.0)));
}

TEST_CASE("convexity validation") {
  const auto good = validate_convex(SupportFunction2D(1.0, {{2, 0.2, 0.0}}));
  CHECK(good.ok);
  CHECK(good.min_radius == doctest::Approx(0.4).epsilon(1e-10));
  CHECK(good.harmonic_bound == doctest::Approx(0.4));

  const SupportFunction2D bad(1.0, {{3, 0.2, 0.0}});
  const auto report = validate_convex(bad);
  CHECK_FALSE(report.ok);
  CHECK(report.min_radius == doctest::Approx(-0.6).epsilon(1e-10));
  try {
    require_convex(bad);
    FAIL("expected ConvexityViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConvexityViolation);
  }
  CHECK_THROWS_AS(validate_convex(bad, 4), Error);
}

TEST_CASE("property: harmonic bound is a lower bound for the radius of curvature") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> c(-0.05, 0.05);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Harmonic> hs;
    for (int k = 1; k <= 6; ++k) hs.push_back({k, c(rng), c(rng)});
    const SupportFunction2D h(1.0, hs);
    CHECK(validate_convex(h).min_radius >= h.harmonic_bound() - 1e-12);
  }
}

TEST_CASE("framed curve") {
  const auto h = sample_body();
  const double theta0 = 0.8;
  const auto fc = make_framed_curve(h, theta0);
  CHECK(std::abs(fc.support(0.0).d1) < 1e-14);
  CHECK(fc.radius_of_curvature(0.0) == doctest::Approx(curvature_radius(h, theta0)));
  // Points in frame coordinates map back to the body.
  for (double t : {-0.2, 0.0, 0.3}) {
    CHECK((fc.point(t) + fc.origin() - boundary_point(h, theta0 + t)).norm() < 1e-12);
  }

  const Vec2 origin = boundary_point(h, theta0) - 0.6 * unit(theta0);
  const auto about = make_framed_curve_about(h, theta0, origin);
  CHECK(about.support(0.0).value == doctest::Approx(0.6));
  CHECK(std::abs(about.support(0.0).d1) < 1e-12);
  try {
    make_framed_curve_about(h, theta0, origin + 0.1 * unit_perp(theta0));
    FAIL("expected NotConcurrent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotConcurrent);
  }
}
