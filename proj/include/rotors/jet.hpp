#pragma once

#include <cmath>

#include <Eigen/Core>

namespace rotors {

/// Second-order forward jet of a scalar function of three variables:
/// value, gradient and Hessian.
struct Jet3 {
  double v = 0.0;
  Eigen::Vector3d g = Eigen::Vector3d::Zero();
  Eigen::Matrix3d H = Eigen::Matrix3d::Zero();

  static Jet3 constant(double c) {
    Jet3 j;
    j.v = c;
    return j;
  }
  /// The coordinate function x_i evaluated at `at`.
  static Jet3 variable(int i, double at) {
    Jet3 j;
    j.v = at;
    j.g(i) = 1.0;
    return j;
  }

  Jet3& operator+=(const Jet3& o) {
    v += o.v;
    g += o.g;
    H += o.H;
    return *this;
  }
  Jet3& operator-=(const Jet3& o) {
    v -= o.v;
    g -= o.g;
    H -= o.H;
    return *this;
  }
  Jet3& operator*=(double s) {
    v *= s;
    g *= s;
    H *= s;
    return *this;
  }
};

inline Jet3 operator+(Jet3 a, const Jet3& b) { return a += b; }
inline Jet3 operator-(Jet3 a, const Jet3& b) { return a -= b; }
inline Jet3 operator*(Jet3 a, double s) { return a *= s; }
inline Jet3 operator*(double s, Jet3 a) { return a *= s; }

inline Jet3 operator*(const Jet3& a, const Jet3& b) {
  Jet3 out;
  out.v = a.v * b.v;
  out.g = a.v * b.g + b.v * a.g;
  out.H = a.v * b.H + b.v * a.H + a.g * b.g.transpose() + b.g * a.g.transpose();
  return out;
}

/// f(a) for a scalar function with derivatives f0, f1, f2 at a.v.
inline Jet3 compose(const Jet3& a, double f0, double f1, double f2) {
  Jet3 out;
  out.v = f0;
  out.g = f1 * a.g;
  out.H = f1 * a.H + f2 * a.g * a.g.transpose();
  return out;
}

/// a^p for a.v > 0.
inline Jet3 pow(const Jet3& a, double p) {
  const double f0 = std::pow(a.v, p);
  return compose(a, f0, p * f0 / a.v, p * (p - 1.0) * f0 / (a.v * a.v));
}

}  // namespace rotors
