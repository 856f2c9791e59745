#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rotors/error.hpp"
#include "rotors/immobilize.hpp"
#include "rotors/io.hpp"
#include "rotors/lines3d.hpp"
#include "rotors/render.hpp"
#include "rotors/rotor3d.hpp"
#include "rotors/triangle_rotor.hpp"

namespace py = pybind11;
using namespace rotors;

namespace {

using P2 = std::array<double, 2>;
using P3 = std::array<double, 3>;

P2 tup(const Vec2& v) { return {v.x(), v.y()}; }
P3 tup(const Vec3& v) { return {v.x(), v.y(), v.z()}; }
Vec3 vec(const P3& p) { return {p[0], p[1], p[2]}; }

std::vector<P2> tups(const std::array<Vec2, 3>& vs) { return {tup(vs[0]), tup(vs[1]), tup(vs[2])}; }

py::dict contact_dict(const ContactData& cd) {
  py::dict d;
  d["rotation"] = cd.rotation;
  d["normal_angle"] = cd.normal_angle;
  d["x"] = tups(cd.x);
  d["kappa"] = cd.kappa;
  d["center"] = tup(cd.center);
  d["concurrency_residual"] = cd.concurrency_residual;
  d["r"] = cd.r;
  d["a"] = cd.a;
  d["b"] = cd.b;
  d["vertices"] = tups(cd.vertices);
  return d;
}

std::array<PlueckerLine, 4> lines_from(const std::vector<std::pair<P3, P3>>& lines) {
  if (lines.size() != 4) throw Error(ErrorKind::InvalidInput, "expected four (point, direction) pairs");
  std::array<PlueckerLine, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = pluecker(vec(lines[i].first), vec(lines[i].second));
  return out;
}

}  // namespace

PYBIND11_MODULE(_rotors, m) {
  m.doc() = "Rotors of convex bodies in triangles and tetrahedra";

  py::register_exception<Error>(m, "RotorsError", PyExc_ValueError);

  py::class_<SupportFunction2D>(m, "SupportFunction2D")
      .def(py::init([](double c0, const std::vector<std::tuple<int, double, double>>& harmonics) {
             std::vector<Harmonic> hs;
             for (const auto& [k, a, b] : harmonics) hs.push_back({k, a, b});
             return SupportFunction2D(c0, hs);
           }),
           py::arg("c0"), py::arg("harmonics") = std::vector<std::tuple<int, double, double>>{})
      .def_static("circle", [](double r, const P2& c) { return SupportFunction2D::circle(r, {c[0], c[1]}); },
                  py::arg("radius"), py::arg("center") = P2{0.0, 0.0})
      .def_static("from_json", [](const std::string& s) { return io::support2d_from_json(io::json::parse(s)); })
      .def("to_json", [](const SupportFunction2D& h) { return io::to_json(h).dump(); })
      .def_property_readonly("c0", &SupportFunction2D::c0)
      .def_property_readonly("harmonics",
                             [](const SupportFunction2D& h) {
                               std::vector<std::tuple<int, double, double>> out;
                               for (const auto& [k, a, b] : h.harmonics()) out.emplace_back(k, a, b);
                               return out;
                             })
      .def("value", &SupportFunction2D::value)
      .def("derivative", &SupportFunction2D::derivative, py::arg("theta"), py::arg("order"))
      .def("boundary_point", [](const SupportFunction2D& h, double t) { return tup(boundary_point(h, t)); })
      .def("curvature_radius", [](const SupportFunction2D& h, double t) { return curvature_radius(h, t); })
      .def("min_curvature_radius", [](const SupportFunction2D& h) { return validate_convex(h).min_radius; });

  py::class_<TriangleShape>(m, "TriangleShape")
      .def(py::init([](const std::array<double, 3>& psi, double r) { return TriangleShape{psi, r}; }),
           py::arg("psi"), py::arg("inradius"))
      .def_static("equilateral", &TriangleShape::equilateral, py::arg("inradius") = 1.0)
      .def_static("from_vertices",
                  [](const P2& a, const P2& b, const P2& c) {
                    return TriangleShape::from_vertices({a[0], a[1]}, {b[0], b[1]}, {c[0], c[1]});
                  })
      .def_readonly("psi", &TriangleShape::psi)
      .def_readonly("inradius", &TriangleShape::inradius);

  m.def(
      "is_rotor",
      [](const SupportFunction2D& h, const TriangleShape& t, int samples, double tol) {
        const auto r = is_rotor(h, t, samples, tol);
        return py::make_tuple(r.ok, r.max_defect);
      },
      py::arg("h"), py::arg("triangle"), py::arg("samples") = kDefaultRotorSamples, py::arg("tol") = 1e-10,
      "(ok, max inradius defect) over uniformly sampled rotations.");
  m.def(
      "equilateral_rotor",
      [](double c0, const std::vector<std::tuple<int, double, double>>& harmonics) {
        std::vector<Harmonic> hs;
        for (const auto& [k, a, b] : harmonics) hs.push_back({k, a, b});
        return equilateral_rotor(c0, hs);
      },
      py::arg("c0"), py::arg("harmonics"));
  m.def(
      "contact_data",
      [](const SupportFunction2D& h, const TriangleShape& t, double rho) { return contact_dict(contact_data(h, t, rho)); },
      py::arg("h"), py::arg("triangle"), py::arg("rotation"));
  m.def(
      "identity_residual",
      [](const SupportFunction2D& h, const TriangleShape& t, double rho) {
        return curvature_identity_residual(contact_data(h, t, rho));
      },
      py::arg("h"), py::arg("triangle"), py::arg("rotation"),
      "sum a_i / (kappa_i r_i) - 1 at one rotation.");

  m.def(
      "omega",
      [](const SupportFunction2D& h, const std::array<double, 3>& angles) {
        const auto r = omega(h, angles);
        py::dict d;
        d["omega"] = r.omega;
        d["decision"] = std::string(to_string(r.decision));
        d["center"] = tup(r.contacts.center);
        d["a"] = r.contacts.a;
        return d;
      },
      py::arg("h"), py::arg("angles"));
  m.def(
      "penetration_oracle",
      [](const SupportFunction2D& h, const std::array<double, 3>& angles, double radius, int size) {
        PenetrationOptions opts;
        opts.grid_radius = radius;
        opts.grid_size = size;
        return penetration_oracle(h, angles, opts);
      },
      py::arg("h"), py::arg("angles"), py::arg("grid_radius") = 1e-2, py::arg("grid_size") = 21);
  m.def(
      "concurrent_triples",
      [](const SupportFunction2D& h, const P2& p) { return concurrent_triples(h, {p[0], p[1]}); }, py::arg("h"),
      py::arg("point"));

  m.def(
      "classify_ruling",
      [](const std::vector<std::pair<P3, P3>>& lines, double tol) {
        const auto c = classify_ruling(lines_from(lines), tol);
        py::dict d;
        d["verdict"] = std::string(to_string(c.verdict));
        d["rank"] = c.rank.rank;
        d["sigma_ratio"] = c.rank.sigma_ratio;
        d["singular_values"] = c.rank.singular_values;
        return d;
      },
      py::arg("lines"), py::arg("tol") = kDefaultClassifyTol, "Lines as (point, direction) pairs.");

  py::class_<SupportFunction3D>(m, "SupportFunction3D")
      .def(py::init([](double c0, const std::vector<std::tuple<int, int, double>>& terms) {
             std::vector<ShTerm> ts;
             for (const auto& [l, mm, c] : terms) ts.push_back({l, mm, c});
             return SupportFunction3D(c0, ts);
           }),
           py::arg("c0"), py::arg("terms") = std::vector<std::tuple<int, int, double>>{})
      .def_static("sphere", [](double r, const P3& c) { return SupportFunction3D::sphere(r, vec(c)); },
                  py::arg("radius"), py::arg("center") = P3{0.0, 0.0, 0.0})
      .def_static("from_json", [](const std::string& s) { return io::support3d_from_json(io::json::parse(s)); })
      .def("to_json", [](const SupportFunction3D& h) { return io::to_json(h).dump(); })
      .def_property_readonly("c0", &SupportFunction3D::c0)
      .def("value", [](const SupportFunction3D& h, const P3& n) { return eval_support3(h, vec(n)).first; })
      .def("contact_point", [](const SupportFunction3D& h, const P3& n) { return tup(contact_point3(h, vec(n))); });

  py::class_<TetrahedronShape>(m, "TetrahedronShape")
      .def_static("regular", &TetrahedronShape::regular, py::arg("inradius") = 1.0)
      .def_readonly("inradius", &TetrahedronShape::inradius);

  m.def(
      "circumscribed_volume",
      [](const SupportFunction3D& h, const TetrahedronShape& t, const std::array<double, 4>& q) {
        return circum_tetra(h, t, Quat(q[0], q[1], q[2], q[3])).volume;
      },
      py::arg("h"), py::arg("tetra"), py::arg("quaternion") = std::array<double, 4>{1, 0, 0, 0},
      "Volume of the circumscribed tetrahedron at a rotation given as (w, x, y, z).");
  m.def(
      "rotor_defect",
      [](const SupportFunction3D& h, const TetrahedronShape& t, int samples, std::uint64_t seed) {
        return rotor_defect(h, t, samples, seed).max_defect;
      },
      py::arg("h"), py::arg("tetra"), py::arg("samples") = 1000, py::arg("seed") = 1);
  m.def(
      "normal_ruling_check",
      [](const SupportFunction3D& h, const TetrahedronShape& t, int samples, double rank_tol, std::uint64_t seed) {
        const auto r = normal_ruling_check(h, t, samples, rank_tol, seed);
        py::dict d;
        d["is_rotor"] = r.is_rotor;
        d["rotor_defect"] = r.rotor_defect;
        d["worst_sigma_ratio"] = r.worst_sigma_ratio;
        py::dict hist;
        for (int v = 0; v < 4; ++v) hist[py::str(std::string(to_string(static_cast<Verdict>(v))))] = r.histogram[v];
        d["verdicts"] = hist;
        d["skipped"] = r.skipped;
        return d;
      },
      py::arg("h"), py::arg("tetra"), py::arg("samples") = 1000, py::arg("rank_tol") = 1e-6, py::arg("seed") = 1);
  m.def(
      "search_rotor",
      [](const TetrahedronShape& t, const std::vector<int>& degrees, int steps, std::uint64_t seed) {
        const auto r = search_rotor(t, harmonic_basis(degrees), steps, seed);
        return py::make_tuple(r.h, r.defect);
      },
      py::arg("tetra"), py::arg("degrees") = std::vector<int>{1, 2, 5}, py::arg("steps") = 200,
      py::arg("seed") = 1, "(best body, volume defect).");

  m.def("render_frame", &render_frame, py::arg("h"), py::arg("triangle"), py::arg("rotation") = 0.0,
        "SVG document of the body in its circumscribed triangle.");
}
