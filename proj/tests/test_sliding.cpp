#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rotors/error.hpp"
#include "rotors/sliding.hpp"
#include "rotors/triangle_rotor.hpp"

using namespace rotors;

namespace {

struct Setup {
  SupportFunction2D h;
  ContactData cd;
  SlidingFamily family;
};

Setup make_setup(const SupportFunction2D& h, double rho) {
  const auto cd = contact_data(h, TriangleShape::equilateral(h.c0()), rho);
  SlidingFamily family(make_framed_curve_about(h, cd.normal_angle[0], cd.center),
                       make_framed_curve_about(h, cd.normal_angle[1], cd.center));
  return {h, cd, std::move(family)};
}

// f(t) from the two support values alone.
Vec2 oracle_translation(const SupportFunction2D& h, const ContactData& cd, double t) {
  std::array<double, 2> ang, rhs;
  for (int i = 0; i < 2; ++i) {
    ang[i] = cd.normal_angle[i] + t;
    const double p_t = h.value(ang[i]) - cd.center.dot(oracle::u(ang[i]));
    const double p_0 = h.value(cd.normal_angle[i]) - cd.center.dot(oracle::u(cd.normal_angle[i]));
    rhs[i] = p_t - p_0;
  }
  return oracle::meet(ang[0], rhs[0], ang[1], rhs[1]);
}

}  // namespace

TEST_CASE("translation solves the tangency system") {
  const auto s = make_setup(SupportFunction2D(1.0, {{2, 0.2, 0.0}}), 0.3);
  for (double t : {-0.15, -0.05, 0.0, 0.07, 0.18}) {
    CHECK((s.family.translation(t) - oracle_translation(s.h, s.cd, t)).norm() < 1e-12);
    CHECK((solve_sliding(s.family.first(), s.family.second(), t) - s.family.translation(t)).norm() < 1e-14);
  }
  CHECK(s.family.translation(0.0).norm() < 1e-15);
  CHECK(s.family.sample_parameters().size() == s.family.sample_translations().size());
}

TEST_CASE("analytic jet agrees with finite differences of the oracle") {
  const auto s = make_setup(SupportFunction2D(1.0, {{2, 0.1, -0.05}, {4, 0.01, 0.02}}), 1.1);
  for (double t : {-0.1, 0.0, 0.12}) {
    const auto jet = s.family.translation_jet(t);
    const double e = 1e-4;
    const Vec2 fp = oracle_translation(s.h, s.cd, t + e);
    const Vec2 fm = oracle_translation(s.h, s.cd, t - e);
    const Vec2 f0 = oracle_translation(s.h, s.cd, t);
    CHECK((jet.d1 - (fp - fm) / (2 * e)).norm() < 1e-7);
    CHECK((jet.d2 - (fp - 2 * f0 + fm) / (e * e)).norm() < 1e-5);
  }
}

TEST_CASE("sliding derivatives vanish to first order at a rotor contact") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = make_setup(oracle::random_rotor(rng), 0.37 * trial);
    const auto d = sliding_derivatives(s.family, 1e-3);
    CHECK(d.f0.norm() < 1e-12);
    CHECK(d.f1.norm() < 1e-8);
    CHECK((d.f2 - s.family.translation_jet(0.0).d2).norm() < 1e-6);
  }
  const auto s = make_setup(SupportFunction2D(1.0, {{2, 0.2, 0.0}}), 0.0);
  CHECK_THROWS_AS(sliding_derivatives(s.family, 0.1), Error);
}

TEST_CASE("envelope of the third side reproduces the rotor") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = make_setup(oracle::random_rotor(rng), 0.5 + trial);
    const double th3 = s.cd.normal_angle[2];
    const Vec2 x3 = s.cd.x[2] - s.cd.center;
    const auto env = envelope_third_line(s.family, th3, x3.dot(unit(th3)));
    CHECK(std::abs(env.support(0.0).d1) < 1e-8);
    for (double t : {-0.1, 0.0, 0.05, 0.15}) {
      const double body = s.h.value(th3 + t) - s.cd.center.dot(unit(th3 + t));
      CHECK(env.support(t).value == doctest::Approx(body).epsilon(1e-11));
    }
    const double predicted = curvature_from_sliding(s.family, x3, x3.norm(), 1e-3);
    CHECK(predicted == doctest::Approx(oracle::radius(s.h, th3)).epsilon(1e-5));
    CHECK(env.radius_of_curvature(0.0) == doctest::Approx(curvature_radius(s.h, th3)).epsilon(1e-9));
  }
}

TEST_CASE("third line through the origin") {
  const auto s = make_setup(SupportFunction2D(1.0, {{2, 0.2, 0.0}}), 0.0);
  try {
    envelope_third_line(s.family, 1.0, 0.0);
    FAIL("expected OriginOnLine");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OriginOnLine);
  }
}

TEST_CASE("frames need a common normal point and transversal normals") {
  const SupportFunction2D h(1.0, {{2, 0.2, 0.0}});
  const auto a = make_framed_curve_about(h, 0.0, Vec2::Zero());
  const auto b = make_framed_curve_about(h, M_PI, Vec2::Zero());
  try {
    SlidingFamily family(a, b);
    FAIL("expected ParallelNormals");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParallelNormals);
  }
  const auto c = make_framed_curve(h, 0.3);
  const auto d = make_framed_curve(h, 2.0);
  try {
    SlidingFamily family(c, d);
    FAIL("expected NotConcurrent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotConcurrent);
  }
}

TEST_CASE("trace rows") {
  const auto s = make_setup(SupportFunction2D(1.0, {{2, 0.2, 0.0}}), 0.2);
  const auto env = envelope_third_line(s.family, s.cd.normal_angle[2], (s.cd.x[2] - s.cd.center).dot(unit(s.cd.normal_angle[2])));
  const auto rows = sliding_trace(s.family, env);
  REQUIRE(rows.size() == 81);
  CHECK(rows.front().t == doctest::Approx(-kDefaultSlidingEpsilon));
  CHECK(rows[40].f.norm() < 1e-14);
}
