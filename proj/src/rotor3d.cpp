#include "rotors/rotor3d.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <gsl/gsl_multimin.h>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "rotors/error.hpp"
#include "rotors/spherical_harmonics.hpp"

namespace rotors {

namespace {

constexpr double kPi3 = 3.14159265358979323846;
// Coefficient of Y_1m that translates the body by one unit.
const double kTranslationScale = std::sqrt(4.0 * kPi3 / 3.0);

std::pair<Vec3, Vec3> tangent_basis(const Vec3& n) {
  const Vec3 helper = std::abs(n.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 e1 = n.cross(helper).normalized();
  return {e1, n.cross(e1)};
}

}  // namespace

double SupportEval3::convexity_margin(const Vec3& n) const {
  const auto [e1, e2] = tangent_basis(n);
  const double a = e1.dot(hessian * e1);
  const double b = e1.dot(hessian * e2);
  const double c = e2.dot(hessian * e2);
  return 0.5 * (a + c) - std::sqrt(0.25 * (a - c) * (a - c) + b * b);
}

SupportFunction3D::SupportFunction3D(double c0, std::vector<ShTerm> terms) : c0_(c0) {
  for (const auto& t : terms) {
    if (t.l < 1 || t.l > kMaxDegree || std::abs(t.m) > t.l) {
      std::ostringstream os;
      os << "harmonic (l = " << t.l << ", m = " << t.m << ") outside 1 <= l <= " << kMaxDegree
         << ", |m| <= l";
      throw Error(ErrorKind::InvalidInput, os.str());
    }
  }
  std::stable_sort(terms.begin(), terms.end(), [](const ShTerm& a, const ShTerm& b) {
    return a.l != b.l ? a.l < b.l : a.m < b.m;
  });
  for (const auto& t : terms) {
    if (!terms_.empty() && terms_.back().l == t.l && terms_.back().m == t.m) {
      terms_.back().coeff += t.coeff;
    } else {
      terms_.push_back(t);
    }
  }
}

SupportFunction3D SupportFunction3D::sphere(double radius, const Vec3& center) {
  if (center.isZero(0.0)) return SupportFunction3D(radius);
  return SupportFunction3D(radius, {{1, 1, center.x() * kTranslationScale},
                                    {1, -1, center.y() * kTranslationScale},
                                    {1, 0, center.z() * kTranslationScale}});
}

int SupportFunction3D::max_degree() const {
  int l = 0;
  for (const auto& t : terms_) l = std::max(l, t.l);
  return l;
}

SupportEval3 SupportFunction3D::eval(const Vec3& n) const {
  // Degree-one homogeneous extension H(x) = c0 |x| + sum c |x|^(1-l) S_lm(x).
  const auto table = solid_harmonics(max_degree(), n);
  const Jet3 jx = Jet3::variable(0, n.x());
  const Jet3 jy = Jet3::variable(1, n.y());
  const Jet3 jz = Jet3::variable(2, n.z());
  const Jet3 r2 = jx * jx + jy * jy + jz * jz;
  const Jet3 r = pow(r2, 0.5);

  Jet3 total = c0_ * r;
  int cached_l = -1;
  Jet3 radial;
  for (const auto& t : terms_) {
    if (t.l != cached_l) {
      radial = t.l == 1 ? Jet3::constant(1.0) : pow(r, 1.0 - t.l);
      cached_l = t.l;
    }
    total += t.coeff * (radial * table[sh_index(t.l, t.m)]);
  }
  SupportEval3 out;
  out.value = total.v / r.v;
  out.grad = total.g - total.g.dot(n) / n.squaredNorm() * n;
  out.hessian = total.H;
  return out;
}

SupportFunction3D SupportFunction3D::translated(const Vec3& t) const {
  auto terms = terms_;
  terms.push_back({1, 1, t.x() * kTranslationScale});
  terms.push_back({1, -1, t.y() * kTranslationScale});
  terms.push_back({1, 0, t.z() * kTranslationScale});
  return SupportFunction3D(c0_, std::move(terms));
}

SupportFunction3D SupportFunction3D::scaled(double s) const {
  auto terms = terms_;
  for (auto& t : terms) t.coeff *= s;
  return SupportFunction3D(c0_ * s, std::move(terms));
}

std::pair<double, Vec3> eval_support3(const SupportFunction3D& h, const Vec3& n) {
  if (std::abs(n.norm() - 1.0) > 1e-12) {
    throw Error(ErrorKind::NotUnit, "support direction must be a unit vector");
  }
  const auto e = h.eval(n);
  return {e.value, e.grad};
}

Vec3 contact_point3(const SupportFunction3D& h, const Vec3& n) {
  if (std::abs(n.norm() - 1.0) > 1e-12) {
    throw Error(ErrorKind::NotUnit, "support direction must be a unit vector");
  }
  const auto e = h.eval(n);
  const double margin = e.convexity_margin(n);
  if (!(margin > 0.0)) {
    std::ostringstream os;
    os << "support Hessian margin " << margin << " <= 0 at n = (" << n.x() << ", " << n.y() << ", "
       << n.z() << ")";
    throw Error(ErrorKind::ConvexityViolation, os.str());
  }
  return e.contact(n);
}

std::vector<Vec3> icosphere(int level) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {{-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
                             {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
                             {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& v : verts) v.normalize();
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
      {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
  for (int it = 0; it < level; ++it) {
    std::map<std::pair<int, int>, int> midpoints;
    auto midpoint = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      const auto found = midpoints.find(key);
      if (found != midpoints.end()) return found->second;
      verts.push_back((verts[a] + verts[b]).normalized());
      const int idx = static_cast<int>(verts.size()) - 1;
      midpoints.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& [a, b, c] : faces) {
      const int ab = midpoint(a, b);
      const int bc = midpoint(b, c);
      const int ca = midpoint(c, a);
      next.push_back({a, ab, ca});
      next.push_back({b, bc, ab});
      next.push_back({c, ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }
  return verts;
}

ConvexityReport3 validate_convex3(const SupportFunction3D& h, int level) {
  ConvexityReport3 report;
  const auto nodes = icosphere(level);
  report.nodes = static_cast<int>(nodes.size());
  report.min_margin = std::numeric_limits<double>::infinity();
  for (const auto& n : nodes) {
    const double margin = h.eval(n).convexity_margin(n);
    if (margin < report.min_margin) {
      report.min_margin = margin;
      report.argmin = n;
    }
  }
  report.ok = h.c0() > 0.0 && report.min_margin >= 1e-6 * h.c0();
  return report;
}

TetrahedronShape TetrahedronShape::regular(double inradius) {
  const double s = 1.0 / std::sqrt(3.0);
  return {{Vec3{s, s, s}, Vec3{s, -s, -s}, Vec3{-s, s, -s}, Vec3{-s, -s, s}}, inradius};
}

void TetrahedronShape::validate() const {
  if (!(inradius > 0.0)) throw Error(ErrorKind::DegenerateShape, "inradius must be positive");
  for (const auto& n : nu) {
    if (std::abs(n.norm() - 1.0) > 1e-9) {
      throw Error(ErrorKind::DegenerateShape, "facet normals must be unit vectors");
    }
  }
  Eigen::Matrix3d m;
  m << nu[1], nu[2], nu[3];
  if (std::abs(m.determinant()) < 1e-12) {
    throw Error(ErrorKind::DegenerateShape, "three facet normals are coplanar");
  }
  const Vec3 w = m.partialPivLu().solve(-nu[0]);
  if (!(w.minCoeff() > 0.0)) {
    throw Error(ErrorKind::DegenerateShape, "facet normals do not positively span space");
  }
}

CircumTetra circum_tetra(const SupportFunction3D& h, const TetrahedronShape& shape, const Quat& rotation) {
  shape.validate();
  CircumTetra out;
  out.rotation = rotation.normalized();
  const Eigen::Matrix3d rot = out.rotation.toRotationMatrix();
  std::array<SupportEval3, 4> evals;
  for (int i = 0; i < 4; ++i) {
    const Vec3 n = (rot * shape.nu[i]).normalized();
    evals[i] = h.eval(n);
    out.planes[i] = {n, evals[i].value};
  }
  for (int i = 0; i < 4; ++i) {
    Eigen::Matrix3d a;
    Vec3 b;
    int row = 0;
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      a.row(row) = out.planes[j].normal.transpose();
      b(row) = out.planes[j].offset;
      ++row;
    }
    if (std::abs(a.determinant()) < 1e-12) {
      throw Error(ErrorKind::DegenerateShape, "three face planes do not meet in a point");
    }
    out.vertices[i] = a.partialPivLu().solve(b);
  }
  Eigen::Matrix3d edges;
  edges << out.vertices[1] - out.vertices[0], out.vertices[2] - out.vertices[0],
      out.vertices[3] - out.vertices[0];
  out.volume = std::abs(edges.determinant()) / 6.0;
  if (!(out.volume > 0.0)) throw Error(ErrorKind::DegenerateShape, "circumscribed volume vanishes");
  for (int i = 0; i < 4; ++i) {
    const Vec3& n = out.planes[i].normal;
    if (!(evals[i].convexity_margin(n) > 0.0)) {
      throw Error(ErrorKind::ConvexityViolation, "support Hessian not positive at a contact");
    }
    out.contacts[i] = evals[i].contact(n);
    out.normals[i] = pluecker(out.contacts[i], n);
  }
  return out;
}

namespace {

double radical_inverse(std::uint64_t index, int base) {
  double inv = 1.0 / base;
  double factor = inv;
  double result = 0.0;
  while (index > 0) {
    result += static_cast<double>(index % base) * factor;
    index /= base;
    factor *= inv;
  }
  return result;
}

}  // namespace

std::vector<Quat> rotation_samples(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::array<double, 3> shift{};
  for (auto& s : shift) s = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  std::vector<Quat> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  constexpr std::array<int, 3> kBases{2, 3, 5};
  for (int i = 0; i < count; ++i) {
    std::array<double, 3> u{};
    for (int k = 0; k < 3; ++k) {
      u[k] = radical_inverse(static_cast<std::uint64_t>(i) + 1, kBases[k]) + shift[k];
      if (u[k] >= 1.0) u[k] -= 1.0;
    }
    const double a = std::sqrt(1.0 - u[0]);
    const double b = std::sqrt(u[0]);
    const double t1 = 2.0 * kPi3 * u[1];
    const double t2 = 2.0 * kPi3 * u[2];
    out.emplace_back(a * std::sin(t1), a * std::cos(t1), b * std::sin(t2), b * std::cos(t2));
  }
  return out;
}

RotorDefect rotor_defect(const SupportFunction3D& h, const TetrahedronShape& shape, int samples,
                         std::uint64_t seed) {
  if (samples < 10) throw Error(ErrorKind::InvalidInput, "rotor defect needs at least 10 samples");
  std::vector<double> volumes;
  volumes.reserve(samples);
  for (const auto& q : rotation_samples(samples, seed)) volumes.push_back(circum_tetra(h, shape, q).volume);
  RotorDefect out;
  for (double v : volumes) out.mean_volume += v;
  out.mean_volume /= static_cast<double>(volumes.size());
  for (double v : volumes) {
    out.max_defect = std::max(out.max_defect, std::abs(v - out.mean_volume) / out.mean_volume);
  }
  return out;
}

namespace {

double contact_scale(const CircumTetra& tet) {
  double s = 0.0;
  for (const auto& c : tet.contacts) s = std::max(s, c.norm());
  return s;
}

}  // namespace

std::vector<SweepRow> rotor_sweep(const SupportFunction3D& h, const TetrahedronShape& shape, int samples,
                                  std::uint64_t seed, double rank_tol) {
  std::vector<SweepRow> rows;
  const auto rotations = rotation_samples(samples, seed);
  rows.reserve(rotations.size());
  for (int i = 0; i < static_cast<int>(rotations.size()); ++i) {
    const auto tet = circum_tetra(h, shape, rotations[i]);
    SweepRow row;
    row.index = i;
    row.rotation = tet.rotation;
    row.volume = tet.volume;
    const auto cls = classify_ruling(tet.normals, kDefaultClassifyTol, rank_tol, contact_scale(tet));
    row.singular_values = cls.rank.singular_values;
    row.sigma_ratio = cls.rank.sigma_ratio;
    row.verdict = cls.verdict;
    rows.push_back(row);
  }
  return rows;
}

NormalRulingReport normal_ruling_check(const SupportFunction3D& h, const TetrahedronShape& shape,
                                       int samples, double rank_tol, std::uint64_t seed,
                                       double rotor_tol) {
  NormalRulingReport report;
  report.samples = samples;
  report.rotor_defect = rotor_defect(h, shape, samples, seed).max_defect;
  report.is_rotor = report.rotor_defect <= rotor_tol;
  if (!report.is_rotor) return report;

  for (const auto& q : rotation_samples(samples, seed)) {
    const auto tet = circum_tetra(h, shape, q);
    try {
      const auto cls = classify_ruling(tet.normals, kDefaultClassifyTol, rank_tol, contact_scale(tet));
      report.worst_sigma_ratio = std::max(report.worst_sigma_ratio, cls.rank.sigma_ratio);
      ++report.histogram[static_cast<int>(cls.verdict)];
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DirectionsDependent) throw;
      ++report.skipped;
    }
  }
  return report;
}

std::vector<std::pair<int, int>> harmonic_basis(const std::vector<int>& degrees) {
  std::vector<std::pair<int, int>> out;
  for (int l : degrees) {
    for (int m = -l; m <= l; ++m) out.emplace_back(l, m);
  }
  return out;
}

namespace {

struct SearchContext {
  const TetrahedronShape* shape;
  const std::vector<std::pair<int, int>>* basis;
  const RotorSearchOptions* options;
  std::uint64_t seed;
  int evaluations = 0;

  SupportFunction3D build(const gsl_vector* x) const {
    std::vector<ShTerm> terms;
    for (std::size_t i = 0; i < basis->size(); ++i) {
      terms.push_back({(*basis)[i].first, (*basis)[i].second, gsl_vector_get(x, i)});
    }
    return SupportFunction3D(shape->inradius, std::move(terms));
  }
};

double search_objective(const gsl_vector* x, void* params) {
  auto* ctx = static_cast<SearchContext*>(params);
  ++ctx->evaluations;
  const auto h = ctx->build(x);
  const auto convexity = validate_convex3(h, 3);
  const double floor = ctx->options->convexity_floor * h.c0();
  if (convexity.min_margin < floor) return 1.0 + (floor - convexity.min_margin);
  return rotor_defect(h, *ctx->shape, ctx->options->inner_samples, ctx->seed).max_defect;
}

}  // namespace

RotorSearchResult search_rotor(const TetrahedronShape& shape, const std::vector<std::pair<int, int>>& basis,
                               int steps, std::uint64_t seed, const RotorSearchOptions& options) {
  shape.validate();
  for (const auto& [l, m] : basis) {
    if (l < 1) throw Error(ErrorKind::InvalidInput, "search basis must exclude degree 0");
  }
  RotorSearchResult result;
  if (basis.empty()) {
    result.h = SupportFunction3D(shape.inradius);
    result.defect = rotor_defect(result.h, shape, options.final_samples, seed).max_defect;
    return result;
  }

  SearchContext ctx{&shape, &basis, &options, seed};
  const std::size_t dim = basis.size();
  gsl_vector* x = gsl_vector_alloc(dim);
  gsl_vector* step = gsl_vector_alloc(dim);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < dim; ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    gsl_vector_set(x, i, (2.0 * u - 1.0) * options.initial_scale * shape.inradius);
    gsl_vector_set(step, i, 0.5 * options.initial_scale * shape.inradius);
  }

  gsl_multimin_function fn{&search_objective, dim, &ctx};
  gsl_multimin_fminimizer* minimizer = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim);
  gsl_multimin_fminimizer_set(minimizer, &fn, x, step);
  for (int it = 0; it < steps; ++it) {
    if (gsl_multimin_fminimizer_iterate(minimizer) != GSL_SUCCESS) break;
    if (gsl_multimin_fminimizer_minimum(minimizer) < 1e-14) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(minimizer), 1e-12) == GSL_SUCCESS) break;
  }
  result.h = ctx.build(gsl_multimin_fminimizer_x(minimizer));
  result.evaluations = ctx.evaluations;
  gsl_multimin_fminimizer_free(minimizer);
  gsl_vector_free(step);
  gsl_vector_free(x);

  result.defect = rotor_defect(result.h, shape, options.final_samples, seed).max_defect;
  return result;
}

}  // namespace rotors
