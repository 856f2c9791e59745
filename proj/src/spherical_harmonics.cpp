#include "rotors/spherical_harmonics.hpp"

#include <cmath>

#include "rotors/error.hpp"

namespace rotors {

namespace {

double normalization(int l, int m) {
  // sqrt((2l+1)/(4pi) * (l-m)!/(l+m)!)
  double ratio = 1.0;
  for (int k = l - m + 1; k <= l + m; ++k) ratio /= k;
  return std::sqrt((2.0 * l + 1.0) / (4.0 * 3.14159265358979323846) * ratio);
}

}  // namespace

std::vector<Jet3> solid_harmonics(int max_degree, const Eigen::Vector3d& x) {
  if (max_degree < 0 || max_degree > kMaxDegree) {
    throw Error(ErrorKind::InvalidInput, "harmonic degree out of range");
  }
  const int count = (max_degree + 1) * (max_degree + 1);
  std::vector<Jet3> out(count);

  const Jet3 jx = Jet3::variable(0, x.x());
  const Jet3 jy = Jet3::variable(1, x.y());
  const Jet3 jz = Jet3::variable(2, x.z());
  const Jet3 r2 = jx * jx + jy * jy + jz * jz;

  // Re and Im of (x + i y)^m.
  Jet3 cm = Jet3::constant(1.0);
  Jet3 sm = Jet3::constant(0.0);
  double double_factorial = 1.0;  // (2m - 1)!!
  for (int m = 0; m <= max_degree; ++m) {
    if (m > 0) {
      const Jet3 c_next = jx * cm - jy * sm;
      const Jet3 s_next = jx * sm + jy * cm;
      cm = c_next;
      sm = s_next;
      double_factorial *= 2.0 * m - 1.0;
    }
    // Q_lm(z, r^2) with r^l P_l^m(z/r) = Q_lm rho^m.
    Jet3 q_prev2;
    Jet3 q_prev = Jet3::constant(double_factorial);
    for (int l = m; l <= max_degree; ++l) {
      Jet3 q;
      if (l == m) {
        q = q_prev;
      } else if (l == m + 1) {
        q = (2.0 * m + 1.0) * (jz * q_prev);
      } else {
        q = (1.0 / (l - m)) * ((2.0 * l - 1.0) * (jz * q_prev) - (l + m - 1.0) * (r2 * q_prev2));
      }
      if (l > m) {
        q_prev2 = q_prev;
        q_prev = q;
      }
      const double n = normalization(l, m);
      if (m == 0) {
        out[sh_index(l, 0)] = n * q;
      } else {
        out[sh_index(l, m)] = (std::sqrt(2.0) * n) * (q * cm);
        out[sh_index(l, -m)] = (std::sqrt(2.0) * n) * (q * sm);
      }
    }
  }
  return out;
}

double real_sh(int l, int m, const Eigen::Vector3d& n) {
  if (l < 0 || std::abs(m) > l) throw Error(ErrorKind::InvalidInput, "invalid harmonic index");
  return solid_harmonics(l, n)[sh_index(l, m)].v;
}

}  // namespace rotors
