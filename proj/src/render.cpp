#include "rotors/render.hpp"

#include <algorithm>
#include <cstdio>

#include "rotors/error.hpp"

namespace rotors {

namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Viewport {
  Vec2 lo;
  double scale = 1.0;
  Vec2 offset;

  Vec2 map(const Vec2& p) const {
    const Vec2 q = offset + scale * (p - lo);
    return {q.x(), kCanvasSize - q.y()};
  }
  std::string xy(const Vec2& p) const {
    const Vec2 q = map(p);
    return fixed(q.x()) + "," + fixed(q.y());
  }
};

Viewport fit(const std::vector<Vec2>& points) {
  Vec2 lo = points.front();
  Vec2 hi = points.front();
  for (const auto& p : points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const Vec2 extent = hi - lo;
  const double span = std::max({extent.x(), extent.y(), 1e-12});
  Viewport v;
  v.lo = lo;
  v.scale = 0.8 * kCanvasSize / span;
  v.offset = 0.5 * (Vec2(kCanvasSize, kCanvasSize) - v.scale * extent);
  return v;
}

}  // namespace

std::string render_frame(const SupportFunction2D& h, const TriangleShape& shape, double rotation) {
  const ContactData cd = contact_data(h, shape, rotation);

  std::vector<Vec2> boundary;
  boundary.reserve(kBoundarySamples);
  for (int i = 0; i < kBoundarySamples; ++i) {
    boundary.push_back(boundary_point(h, kTwoPi * i / kBoundarySamples));
  }
  std::vector<Vec2> all = boundary;
  all.insert(all.end(), cd.vertices.begin(), cd.vertices.end());
  all.push_back(cd.center);
  const Viewport view = fit(all);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  svg += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

  svg += "<polygon id=\"triangle\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (int i = 0; i < 3; ++i) svg += (i ? " " : "") + view.xy(cd.vertices[i]);
  svg += "\"/>\n";

  svg += "<polyline id=\"body\" fill=\"#dde8f4\" stroke=\"#1f4e8c\" stroke-width=\"1.5\" points=\"";
  for (int i = 0; i <= kBoundarySamples; ++i) {
    svg += (i ? " " : "") + view.xy(boundary[i % kBoundarySamples]);
  }
  svg += "\"/>\n";

  svg += "<g id=\"normals\" stroke=\"#b03030\" stroke-width=\"1\">\n";
  for (const auto& x : cd.x) {
    const Vec2 a = view.map(x);
    const Vec2 b = view.map(cd.center);
    svg += "<line x1=\"" + fixed(a.x()) + "\" y1=\"" + fixed(a.y()) + "\" x2=\"" + fixed(b.x()) + "\" y2=\"" +
           fixed(b.y()) + "\"/>\n";
  }
  svg += "</g>\n";

  svg += "<g id=\"contacts\" fill=\"#1f4e8c\">\n";
  for (const auto& x : cd.x) {
    const Vec2 p = view.map(x);
    svg += "<circle cx=\"" + fixed(p.x()) + "\" cy=\"" + fixed(p.y()) + "\" r=\"5\"/>\n";
  }
  svg += "</g>\n";

  const Vec2 o = view.map(cd.center);
  svg += "<circle id=\"center\" cx=\"" + fixed(o.x()) + "\" cy=\"" + fixed(o.y()) + "\" r=\"6\" fill=\"#b03030\"/>\n";
  svg += "</svg>\n";
  return svg;
}

std::vector<std::string> render_sweep(const SupportFunction2D& h, const TriangleShape& shape, int samples) {
  if (samples < 1) throw Error(ErrorKind::InvalidInput, "samples must be positive");
  std::vector<std::string> frames;
  frames.reserve(samples);
  for (double rho : rotation_grid(samples)) frames.push_back(render_frame(h, shape, rho));
  return frames;
}

}  // namespace rotors
