#pragma once

#include <vector>

#include <Eigen/Core>

#include "rotors/jet.hpp"

namespace rotors {

/// Largest supported harmonic degree.
constexpr int kMaxDegree = 8;

/// Index of (l, m) in the packed table returned by solid_harmonics.
constexpr int sh_index(int l, int m) { return l * l + l + m; }

/**
 * Orthonormal real solid harmonics |x|^l Y_lm(x / |x|) for 0 <= l <= max_degree
 * as second-order jets at x. Y_lm uses cos(m phi) for m > 0 and sin(|m| phi)
 * for m < 0, without the Condon-Shortley phase, so that
 * Y_11 ~ x, Y_1-1 ~ y, Y_10 ~ z.
 */
std::vector<Jet3> solid_harmonics(int max_degree, const Eigen::Vector3d& x);

/// Y_lm at a unit vector.
double real_sh(int l, int m, const Eigen::Vector3d& n);

}  // namespace rotors
