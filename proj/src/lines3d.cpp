#include "rotors/lines3d.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <sstream>

#include "rotors/error.hpp"

namespace rotors {

PlueckerLine pluecker(const Vec3& point, const Vec3& direction) {
  const double n = direction.norm();
  if (!(n > 0.0)) throw Error(ErrorKind::ZeroDirection, "line direction has zero length");
  const Vec3 d = direction / n;
  return {d, point.cross(d)};
}

double klein_form(const PlueckerLine& l1, const PlueckerLine& l2) {
  return l1.d.dot(l2.m) + l2.d.dot(l1.m);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Concurrent: return "Concurrent";
    case Verdict::Regulus: return "Regulus";
    case Verdict::PairwisePlanes: return "PairwisePlanes";
    case Verdict::NotGeneric: return "NotGeneric";
  }
  return "Unknown";
}

std::pair<Vec3, double> common_point(std::span<const PlueckerLine> lines) {
  Eigen::Matrix3d lhs = Eigen::Matrix3d::Zero();
  Vec3 rhs = Vec3::Zero();
  for (const auto& l : lines) {
    const Eigen::Matrix3d proj = Eigen::Matrix3d::Identity() - l.d * l.d.transpose();
    lhs += proj;
    rhs += proj * l.foot();
  }
  const Vec3 c = lhs.ldlt().solve(rhs);
  double residual = 0.0;
  for (const auto& l : lines) residual = std::max(residual, l.distance_to(c));
  return {c, residual};
}

namespace {

void require_independent(std::span<const PlueckerLine, 4> lines) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (lines[i].d.cross(lines[j].d).norm() < 1e-9) {
        std::ostringstream os;
        os << "lines " << i + 1 << " and " << j + 1 << " have parallel directions";
        throw Error(ErrorKind::DirectionsDependent, os.str());
      }
    }
  }
}

double characteristic_length(std::span<const PlueckerLine, 4> lines, const Vec3& center, double scale) {
  double len = std::max(center.norm(), scale);
  for (const auto& l : lines) len = std::max(len, l.m.norm());
  return len > 0.0 ? len : 1.0;
}

// Closest points of two non-parallel lines, averaged.
Vec3 meeting_point(const PlueckerLine& a, const PlueckerLine& b) {
  const Vec3 pa = a.foot();
  const Vec3 pb = b.foot();
  const Vec3 n = a.d.cross(b.d);
  const double nn = n.squaredNorm();
  const double s = (pb - pa).cross(b.d).dot(n) / nn;
  const double t = (pb - pa).cross(a.d).dot(n) / nn;
  return 0.5 * ((pa + s * a.d) + (pb + t * b.d));
}

}  // namespace

RuledRank ruled_rank(std::span<const PlueckerLine, 4> lines, double rank_tol, double scale) {
  require_independent(lines);
  RuledRank out;
  out.center = common_point(lines).first;

  std::array<Vec3, 4> moments;
  double spread = 0.0;
  for (int i = 0; i < 4; ++i) {
    moments[i] = lines[i].m - out.center.cross(lines[i].d);
    spread = std::max(spread, moments[i].norm());
  }
  // Lines through one point up to rounding keep their raw scale.
  out.length = spread > 1e-12 * characteristic_length(lines, out.center, scale) ? spread : 1.0;

  Eigen::Matrix<double, 4, 6> mat;
  for (int i = 0; i < 4; ++i) {
    mat.row(i).head<3>() = lines[i].d.transpose();
    mat.row(i).tail<3>() = moments[i].transpose() / out.length;
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 4, 6>> svd(mat, Eigen::ComputeFullV);
  const auto sv = svd.singularValues();
  for (int i = 0; i < 4; ++i) out.singular_values[i] = sv(i);
  out.sigma_ratio = sv(0) > 0.0 ? sv(3) / sv(0) : 0.0;
  out.rank = 0;
  for (int i = 0; i < 4; ++i) {
    if (sv(0) > 0.0 && sv(i) / sv(0) > rank_tol) ++out.rank;
  }
  out.span = svd.matrixV().leftCols<3>();
  return out;
}

RulingClassification classify_ruling(std::span<const PlueckerLine, 4> lines, double tol,
                                     double rank_tol, double scale) {
  RulingClassification out;
  out.rank = ruled_rank(lines, rank_tol, scale);

  const auto [center, residual] = common_point(lines);
  const double abs_tol = tol * characteristic_length(lines, center, scale);
  if (residual <= abs_tol) {
    out.verdict = Verdict::Concurrent;
    out.common_point = center;
    return out;
  }
  if (out.rank.rank >= 4) {
    out.verdict = Verdict::NotGeneric;
    return out;
  }

  static constexpr std::array<std::array<int, 4>, 3> kMatchings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  for (const auto& [i, j, k, l] : kMatchings) {
    if (std::abs(klein_form(lines[i], lines[j])) > abs_tol) continue;
    if (std::abs(klein_form(lines[k], lines[l])) > abs_tol) continue;
    const Vec3 p = meeting_point(lines[i], lines[j]);
    const Vec3 q = meeting_point(lines[k], lines[l]);
    if ((q - p).norm() <= abs_tol) continue;
    const Vec3 n1 = lines[i].d.cross(lines[j].d).normalized();
    const Vec3 n2 = lines[k].d.cross(lines[l].d).normalized();
    if (std::abs((q - p).dot(n1)) > abs_tol || std::abs((q - p).dot(n2)) > abs_tol) continue;
    out.matchings.push_back({{i, j}, {k, l}, p, q});
  }
  if (!out.matchings.empty()) {
    out.verdict = Verdict::PairwisePlanes;
    return out;
  }

  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (std::abs(klein_form(lines[i], lines[j])) <= abs_tol) {
        // A meeting pair outside the paired configuration: degenerate conic.
        out.verdict = Verdict::NotGeneric;
        return out;
      }
    }
  }
  out.verdict = Verdict::Regulus;
  out.regulus_basis = out.rank.span;
  return out;
}

}  // namespace rotors
