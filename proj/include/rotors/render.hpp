#pragma once

#include <string>
#include <vector>

#include "rotors/support2d.hpp"
#include "rotors/triangle_rotor.hpp"

namespace rotors {

constexpr int kCanvasSize = 800;
constexpr int kBoundarySamples = 720;

/**
 * SVG figure of the body in its circumscribed triangle at one rotation:
 * boundary polyline, triangle edges, contact points, the contact normals
 * drawn from each contact through O, and O. The figure's bounding box is
 * fitted to 80% of an 800x800 canvas. Coordinates are printed with a fixed
 * number of decimals so the bytes depend only on the inputs.
 *
 * Throws like contact_data (NotConcurrent for a non-rotor).
 */
std::string render_frame(const SupportFunction2D& h, const TriangleShape& shape, double rotation);

/// One frame per rotation k * 2pi / samples.
std::vector<std::string> render_sweep(const SupportFunction2D& h, const TriangleShape& shape, int samples);

}  // namespace rotors
