#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rotors/error.hpp"
#include "rotors/rotor3d.hpp"

using namespace rotors;

namespace {

SupportFunction3D bumpy() { return SupportFunction3D(1.0, {{2, 1, 0.03}, {3, -2, 0.02}, {4, 0, -0.01}, {5, 3, 0.005}}); }

Quat some_rotation() { return Quat(Eigen::AngleAxisd(0.7, Vec3(1, 2, -1).normalized())); }

}  // namespace

TEST_CASE("evaluation matches finite differences of the homogeneous extension") {
  const auto h = bumpy();
  for (const Vec3& raw : {Vec3(1, 0, 0), Vec3(0.3, -0.4, 0.8), Vec3(-1, 2, 0.5)}) {
    const Vec3 n = raw.normalized();
    const auto ev = h.eval(n);
    CHECK(ev.value == doctest::Approx(h.value(n)));
    // Gradient of H at n is the contact point h n + tangential gradient.
    CHECK((ev.contact(n) - oracle::grad3(h, n)).norm() < 1e-8);
    CHECK((ev.hessian - oracle::hessian3(h, n)).cwiseAbs().maxCoeff() < 1e-5);
    CHECK(std::abs(ev.grad.dot(n)) < 1e-14);
  }
}

TEST_CASE("contact point maximizes the support functional") {
  const auto h = bumpy();
  const Vec3 n = Vec3(0.2, 0.9, -0.3).normalized();
  const Vec3 x = contact_point3(h, n);
  CHECK(x.dot(n) == doctest::Approx(h.value(n)).epsilon(1e-14));
  // Every other contact point lies on the inner side of the plane.
  for (const auto& m : icosphere(3)) CHECK(contact_point3(h, m).dot(n) <= h.value(n) + 1e-12);
  CHECK_THROWS_AS(eval_support3(h, 1.01 * n), Error);
}

TEST_CASE("spheres") {
  const Vec3 c(0.2, -0.1, 0.4);
  const auto h = SupportFunction3D::sphere(2.0, c);
  for (const auto& n : icosphere(1)) {
    CHECK(h.value(n) == doctest::Approx(2.0 + c.dot(n)));
    CHECK((contact_point3(h, n) - (c + 2.0 * n)).norm() < 1e-12);
    CHECK(h.eval(n).convexity_margin(n) == doctest::Approx(2.0));
  }
  CHECK(h.translated(-c).value(Vec3::UnitX()) == doctest::Approx(2.0));
  CHECK(h.scaled(3.0).value(Vec3::UnitZ()) == doctest::Approx(3.0 * h.value(Vec3::UnitZ())));
}

TEST_CASE("convexity on the icosphere") {
  CHECK(icosphere(4).size() == 2562);
  CHECK(validate_convex3(bumpy()).ok);
  const SupportFunction3D bad(1.0, {{4, 0, 0.3}});
  const auto report = validate_convex3(bad);
  CHECK_FALSE(report.ok);
  CHECK(report.min_margin < 0.0);
  CHECK_THROWS_AS(contact_point3(bad, report.argmin), Error);
  CHECK_THROWS_AS(SupportFunction3D(1.0, {{9, 0, 0.1}}), Error);
  CHECK_THROWS_AS(SupportFunction3D(1.0, {{2, 3, 0.1}}), Error);
}

TEST_CASE("regular tetrahedron about the unit sphere") {
  const auto shape = TetrahedronShape::regular(1.0);
  shape.validate();
  const auto tet = circum_tetra(SupportFunction3D::sphere(1.0), shape, some_rotation());
  CHECK(tet.volume == doctest::Approx(8.0 * std::sqrt(3.0)).epsilon(1e-13));
  for (int i = 0; i < 4; ++i) {
    CHECK(tet.normals[i].distance_to(Vec3::Zero()) < 1e-12);
    CHECK(tet.contacts[i].norm() == doctest::Approx(1.0));
    // Vertex i is opposite face i.
    CHECK(tet.vertices[i].dot(tet.planes[i].normal) < tet.planes[i].offset);
  }
}

TEST_CASE("circumscribed volume against plane intersection") {
  const auto h = bumpy();
  const auto shape = TetrahedronShape::regular(1.0);
  for (const auto& q : rotation_samples(5, 3)) {
    const auto tet = circum_tetra(h, shape, q);
    std::array<Vec3, 4> n;
    for (int i = 0; i < 4; ++i) n[i] = q.toRotationMatrix() * shape.nu[i];
    CHECK(tet.volume == doctest::Approx(oracle::tetra_volume(h, n)).epsilon(1e-12));
  }
}

TEST_CASE("property: similarity, translation and scale") {
  const auto h = bumpy();
  const auto shape = TetrahedronShape::regular(1.0);
  const auto q = some_rotation();
  const auto tet = circum_tetra(h, shape, q);
  // Face normals are the rotated normals of the reference shape.
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      CHECK(tet.planes[i].normal.dot(tet.planes[j].normal) == doctest::Approx(shape.nu[i].dot(shape.nu[j])));
    }
  }
  const Vec3 shift(0.3, 0.1, -0.2);
  const auto moved = circum_tetra(h.translated(shift), shape, q);
  CHECK(moved.volume == doctest::Approx(tet.volume).epsilon(1e-12));
  for (int i = 0; i < 4; ++i) CHECK((moved.contacts[i] - tet.contacts[i] - shift).norm() < 1e-12);
  const auto big = circum_tetra(h.scaled(2.0), shape, q);
  CHECK(big.volume == doctest::Approx(8.0 * tet.volume).epsilon(1e-12));
  const auto cls = classify_ruling(tet.normals);
  const auto cls_big = classify_ruling(big.normals);
  CHECK(cls_big.rank.sigma_ratio == doctest::Approx(cls.rank.sigma_ratio).epsilon(1e-8));
}

TEST_CASE("rotation samples") {
  const auto a = rotation_samples(100, 42);
  const auto b = rotation_samples(100, 42);
  const auto c = rotation_samples(100, 43);
  REQUIRE(a.size() == 100);
  for (int i = 0; i < 100; ++i) {
    CHECK(a[i].norm() == doctest::Approx(1.0));
    CHECK(a[i].coeffs() == b[i].coeffs());
  }
  CHECK(a[0].coeffs() != c[0].coeffs());
  // Uniform rotations: E[w^2] = 1/4.
  const auto many = rotation_samples(4000, 1);
  double mean = 0.0;
  for (const auto& q : many) mean += q.w() * q.w();
  CHECK(mean / many.size() == doctest::Approx(0.25).epsilon(0.02));
}

TEST_CASE("rotor defect") {
  const auto shape = TetrahedronShape::regular(1.0);
  CHECK(rotor_defect(SupportFunction3D::sphere(1.0), shape, 200, 1).max_defect < 1e-12);
  CHECK(rotor_defect(SupportFunction3D::sphere(1.0, {0.2, 0.1, 0.0}), shape, 200, 1).max_defect < 1e-12);
  CHECK(rotor_defect(SupportFunction3D(1.0, {{3, -2, 0.05}}), shape, 200, 1).max_defect > 1e-3);
  // Degrees 2 and 5 leave the volume of the regular tetrahedron unchanged.
  CHECK(rotor_defect(SupportFunction3D(1.0, {{2, 1, 0.05}, {5, -3, 0.01}}), shape, 200, 1).max_defect < 1e-12);
  CHECK_THROWS_AS(rotor_defect(SupportFunction3D(1.0), shape, 5, 1), Error);
}

TEST_CASE("normal ruling check") {
  const auto shape = TetrahedronShape::regular(1.0);
  const auto sphere = normal_ruling_check(SupportFunction3D::sphere(1.0), shape, 200, 1e-6, 1);
  CHECK(sphere.is_rotor);
  CHECK(sphere.histogram[static_cast<int>(Verdict::Concurrent)] == 200);
  CHECK(sphere.worst_sigma_ratio < 1e-12);

  const SupportFunction3D rotor(1.0, {{2, 1, 0.05}, {2, -2, 0.02}, {5, -3, 0.01}});
  const auto report = normal_ruling_check(rotor, shape, 200, 1e-6, 1);
  CHECK(report.is_rotor);
  CHECK(report.worst_sigma_ratio < 1e-10);
  CHECK(report.histogram[static_cast<int>(Verdict::NotGeneric)] == 0);

  const auto rows = rotor_sweep(SupportFunction3D(1.0, {{3, -2, 0.05}}), shape, 50, 1);
  int not_generic = 0;
  for (const auto& r : rows) not_generic += r.verdict == Verdict::NotGeneric;
  CHECK(not_generic > 0);
  CHECK_FALSE(normal_ruling_check(SupportFunction3D(1.0, {{3, -2, 0.05}}), shape, 50, 1e-6, 1).is_rotor);
}

TEST_CASE("rotor search") {
  const auto shape = TetrahedronShape::regular(1.0);
  RotorSearchOptions opts;
  opts.final_samples = 200;
  const auto empty = search_rotor(shape, {}, 10, 1, opts);
  CHECK(empty.defect < 1e-12);
  const auto found = search_rotor(shape, harmonic_basis({1, 2, 5}), 20, 1, opts);
  CHECK(found.defect < 1e-8);
  CHECK(harmonic_basis({1, 2}).size() == 8);
}

TEST_CASE("tetrahedron validation") {
  TetrahedronShape flat;
  flat.nu = {Vec3::UnitX(), Vec3::UnitY(), -Vec3::UnitX(), -Vec3::UnitY()};
  CHECK_THROWS_AS(flat.validate(), Error);
}
