#include "rotors/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rotors/error.hpp"
#include "rotors/immobilize.hpp"
#include "rotors/io.hpp"
#include "rotors/lines3d.hpp"
#include "rotors/render.hpp"
#include "rotors/rotor3d.hpp"
#include "rotors/sliding.hpp"
#include "rotors/spherical_harmonics.hpp"
#include "rotors/support2d.hpp"
#include "rotors/triangle_rotor.hpp"

namespace rotors::cli {

namespace {

namespace fs = std::filesystem;
using io::json;

struct Options {
  std::string body;
  std::string triangle;
  std::string tetra;
  std::string lines;
  std::optional<int> samples;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::string out;
  std::string svg_dir;
  std::vector<double> angles;
  double rotation = 0.0;
  std::vector<int> degrees{1, 2, 5};
  int steps = 200;
  bool oracle = false;
};

/// Input could not be loaded or validated.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SupportFunction2D load_body2d(const std::string& path) {
  try {
    auto h = io::support2d_from_json(io::read_json_file(path));
    const auto report = validate_convex(h);
    if (!report.ok) {
      throw InputError("--body: not strictly convex (min radius of curvature " +
                       io::format_number(report.min_radius) + " at theta " +
                       io::format_number(report.argmin) + ")");
    }
    return h;
  } catch (const Error& e) {
    throw InputError("--body: " + std::string(e.what()));
  }
}

TriangleShape load_triangle(const std::string& path, const SupportFunction2D& h) {
  if (path.empty()) return TriangleShape::equilateral(h.c0());
  try {
    auto t = io::triangle_from_json(io::read_json_file(path));
    t.validate();
    return t;
  } catch (const Error& e) {
    throw InputError("--triangle: " + std::string(e.what()));
  }
}

SupportFunction3D load_body3d(const std::string& path) {
  try {
    auto h = io::support3d_from_json(io::read_json_file(path));
    const auto report = validate_convex3(h);
    if (!report.ok) {
      throw InputError("--body: not strictly convex (margin " + io::format_number(report.min_margin) + ")");
    }
    return h;
  } catch (const Error& e) {
    throw InputError("--body: " + std::string(e.what()));
  }
}

TetrahedronShape load_tetra(const std::string& path) {
  if (path.empty()) return TetrahedronShape::regular();
  try {
    auto t = io::tetra_from_json(io::read_json_file(path));
    t.validate();
    return t;
  } catch (const Error& e) {
    throw InputError("--tetra: " + std::string(e.what()));
  }
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("--out: cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

void write_json(Sink& sink, const json& j) { sink.stream() << j.dump(2) << '\n'; }

int cmd_rotor2d_verify(const Options& o, std::ostream& out) {
  const auto h = load_body2d(o.body);
  const auto shape = load_triangle(o.triangle, h);
  Sink sink(o.out, out);
  const auto check = is_rotor(h, shape, o.samples.value_or(kDefaultRotorSamples), o.tol.value_or(1e-10));
  write_json(sink, {{"rotor", check.ok}, {"max_defect", check.max_defect}});
  return check.ok ? kExitOk : kExitCheckFailed;
}

int cmd_identity(const Options& o, std::ostream& out, std::ostream& err) {
  const auto h = load_body2d(o.body);
  const auto shape = load_triangle(o.triangle, h);
  const int samples = o.samples.value_or(100);
  const double tol = o.tol.value_or(1e-8);
  if (samples < 1) throw InputError("--samples: must be positive");
  Sink sink(o.out, out);
  auto& s = sink.stream();
  s << io::contact_csv_header() << '\n';
  double worst = 0.0;
  double worst_duality = 0.0;
  try {
    for (double rho : rotation_grid(samples)) {
      const auto cd = contact_data(h, shape, rho);
      const double res = curvature_identity_residual(cd);
      worst = std::max(worst, std::abs(res));
      worst_duality = std::max(worst_duality, duality_check(cd));
      s << io::contact_csv_row(cd, res) << '\n';
    }
  } catch (const Error& e) {
    s << "# error," << e.what() << '\n';
    err << e.what() << '\n';
    return kExitCheckFailed;
  }
  s << "# max_abs_residual," << io::format_number(worst) << '\n';
  s << "# max_duality_defect," << io::format_number(worst_duality) << '\n';
  if (worst >= tol) {
    err << "identity residual " << io::format_number(worst) << " exceeds tolerance " << io::format_number(tol) << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_slide(const Options& o, std::ostream& out, std::ostream& err) {
  const auto h = load_body2d(o.body);
  const auto shape = load_triangle(o.triangle, h);
  const double tol = o.tol.value_or(1e-5);
  Sink sink(o.out, out);
  auto& s = sink.stream();
  const auto cd = contact_data(h, shape, o.rotation);
  const SlidingFamily family(make_framed_curve_about(h, cd.normal_angle[0], cd.center),
                             make_framed_curve_about(h, cd.normal_angle[1], cd.center));
  const Vec2 x3 = cd.x[2] - cd.center;
  const double theta3 = cd.normal_angle[2];
  const auto envelope = envelope_third_line(family, theta3, x3.dot(unit(theta3)));

  s << io::sliding_csv_header() << '\n';
  for (const auto& row : sliding_trace(family, envelope)) s << io::sliding_csv_row(row) << '\n';

  const auto jet = family.translation_jet(0.0);
  const double predicted = curvature_from_sliding(family, x3, x3.norm(), 1e-3);
  const double actual = curvature_radius(h, theta3);
  const double rel = std::abs(predicted - actual) / std::max(std::abs(actual), 1e-300);
  s << "# f0_norm," << io::format_number(jet.f.norm()) << '\n';
  s << "# f1_norm," << io::format_number(jet.d1.norm()) << '\n';
  s << "# envelope_slope," << io::format_number(envelope.support(0.0).d1) << '\n';
  s << "# curvature_predicted," << io::format_number(predicted) << '\n';
  s << "# curvature_actual," << io::format_number(actual) << '\n';
  s << "# curvature_relative_error," << io::format_number(rel) << '\n';
  if (!(rel <= tol)) {
    err << "curvature mismatch " << io::format_number(rel) << " exceeds tolerance " << io::format_number(tol) << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_immobilize(const Options& o, std::ostream& out, std::ostream& err) {
  const auto h = load_body2d(o.body);
  if (o.angles.size() != 3) throw InputError("--angles: expected three contact normal angles");
  Sink sink(o.out, out);
  const std::array<double, 3> angles{o.angles[0], o.angles[1], o.angles[2]};
  const auto report = omega(h, angles, o.tol.value_or(kIndeterminateBand));
  json j = io::to_json(report);
  int code = kExitOk;
  if (o.oracle) {
    PenetrationOptions po;
    if (o.samples) po.grid_size = *o.samples;
    const bool immobile = penetration_oracle(h, angles, po);
    j["oracle"] = immobile ? "Immobilizes" : "DoesNotImmobilize";
    if (report.decision != Decision::Indeterminate &&
        immobile != (report.decision == Decision::Immobilizes)) {
      err << "oracle disagrees with omega decision\n";
      code = kExitCheckFailed;
    }
  }
  write_json(sink, j);
  return code;
}

int cmd_ruling(const Options& o, std::ostream& out) {
  std::array<PlueckerLine, 4> lines;
  try {
    lines = io::lines_from_json(io::read_json_file(o.lines));
  } catch (const Error& e) {
    throw InputError("--lines: " + std::string(e.what()));
  }
  Sink sink(o.out, out);
  const auto c = classify_ruling(lines, o.tol.value_or(kDefaultClassifyTol));
  write_json(sink, io::to_json(c));
  return c.verdict == Verdict::NotGeneric ? kExitCheckFailed : kExitOk;
}

int cmd_rotor3d_sweep(const Options& o, std::ostream& out) {
  const auto h = load_body3d(o.body);
  const auto shape = load_tetra(o.tetra);
  const int samples = o.samples.value_or(1000);
  if (samples < 1) throw InputError("--samples: must be positive");
  Sink sink(o.out, out);
  auto& s = sink.stream();
  const auto rows = rotor_sweep(h, shape, samples, o.seed, o.tol.value_or(kDefaultRankTol));
  s << io::sweep_csv_header() << '\n';
  double lo = rows.front().volume;
  double hi = lo;
  double mean = 0.0;
  for (const auto& row : rows) {
    s << io::sweep_csv_row(row) << '\n';
    lo = std::min(lo, row.volume);
    hi = std::max(hi, row.volume);
    mean += row.volume;
  }
  mean /= rows.size();
  s << "# volume_min," << io::format_number(lo) << '\n';
  s << "# volume_max," << io::format_number(hi) << '\n';
  s << "# volume_mean," << io::format_number(mean) << '\n';
  return kExitOk;
}

int cmd_normal_ruling(const Options& o, std::ostream& out, std::ostream& err) {
  const auto h = load_body3d(o.body);
  const auto shape = load_tetra(o.tetra);
  const int samples = o.samples.value_or(1000);
  if (samples < 10) throw InputError("--samples: need at least 10");
  const double tol = o.tol.value_or(1e-6);
  Sink sink(o.out, out);
  const auto report = normal_ruling_check(h, shape, samples, tol, o.seed);
  json j = io::to_json(report);
  write_json(sink, j);
  if (!report.is_rotor) {
    err << to_string(ErrorKind::NotARotor) << ": volume defect " << io::format_number(report.rotor_defect) << '\n';
    return kExitCheckFailed;
  }
  if (report.worst_sigma_ratio >= tol) {
    err << "worst sigma ratio " << io::format_number(report.worst_sigma_ratio) << " exceeds tolerance\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_search_rotor(const Options& o, std::ostream& out) {
  const auto shape = load_tetra(o.tetra);
  for (int d : o.degrees) {
    if (d < 1 || d > kMaxDegree) throw InputError("--degrees: each degree must lie in 1.." + std::to_string(kMaxDegree));
  }
  if (o.steps < 1) throw InputError("--steps: must be positive");
  RotorSearchOptions opts;
  if (o.samples) opts.final_samples = *o.samples;
  const auto result = search_rotor(shape, harmonic_basis(o.degrees), o.steps, o.seed, opts);
  Sink sink(o.out, out);
  write_json(sink, {{"body", io::to_json(result.h)},
                    {"defect", result.defect},
                    {"evaluations", result.evaluations},
                    {"rotor", result.defect < kRotorTol}});
  return kExitOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  const auto h = load_body2d(o.body);
  const auto shape = load_triangle(o.triangle, h);
  if (!o.svg_dir.empty()) {
    const int samples = o.samples.value_or(36);
    if (samples < 1) throw InputError("--samples: must be positive");
    std::error_code ec;
    fs::create_directories(o.svg_dir, ec);
    if (ec) throw InputError("--svg-dir: " + ec.message());
    const auto frames = render_sweep(h, shape, samples);
    for (std::size_t i = 0; i < frames.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "frame_%04zu.svg", i);
      std::ofstream f(fs::path(o.svg_dir) / name);
      if (!f) throw InputError("--svg-dir: cannot write frames");
      f << frames[i];
    }
    out << frames.size() << " frames written to " << o.svg_dir << '\n';
    return kExitOk;
  }
  Sink sink(o.out, out);
  sink.stream() << render_frame(h, shape, o.rotation);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotors of convex bodies in triangles and tetrahedra"};
  app.name("rotors");
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output file (default stdout)");
  };
  auto body = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--body", o.body, "Body JSON")->check(CLI::ExistingFile);
    if (required) opt->required();
  };
  auto triangle = [&](CLI::App* sub) {
    sub->add_option("--triangle", o.triangle, "Triangle JSON (default equilateral, inradius c0)")
        ->check(CLI::ExistingFile);
  };
  auto tetra = [&](CLI::App* sub) {
    sub->add_option("--tetra", o.tetra, "Tetrahedron JSON (default regular, inradius 1)")->check(CLI::ExistingFile);
  };
  auto samples = [&](CLI::App* sub) { sub->add_option("--samples", o.samples, "Number of samples"); };
  auto tol = [&](CLI::App* sub) { sub->add_option("--tol", o.tol, "Tolerance"); };
  auto seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "Random seed"); };

  auto* s = app.add_subcommand("rotor2d-verify", "Inradius defect over all rotations");
  body(s), triangle(s), samples(s), tol(s), add_common(s);
  s->callback([&] { action = [&] { return cmd_rotor2d_verify(o, out); }; });

  s = app.add_subcommand("theorem1", "Contact data and curvature identity per rotation (CSV)");
  body(s), triangle(s), samples(s), tol(s), add_common(s);
  s->callback([&] { action = [&] { return cmd_identity(o, out, err); }; });

  s = app.add_subcommand("slide", "Sliding family through two contacts and the third envelope (CSV)");
  body(s), triangle(s), tol(s), add_common(s);
  s->add_option("--rotation", o.rotation, "Triangle rotation in radians");
  s->callback([&] { action = [&] { return cmd_slide(o, out, err); }; });

  s = app.add_subcommand("immobilize", "Immobilization test for three contact normals");
  body(s), tol(s), samples(s), add_common(s);
  s->add_option("--angles", o.angles, "Three outward normal angles")->delimiter(',')->expected(3)->required();
  s->add_flag("--oracle", o.oracle, "Also run the brute-force penetration search");
  s->callback([&] { action = [&] { return cmd_immobilize(o, out, err); }; });

  s = app.add_subcommand("ruling", "Classify four lines");
  s->add_option("--lines", o.lines, "Lines JSON")->check(CLI::ExistingFile)->required();
  tol(s), add_common(s);
  s->callback([&] { action = [&] { return cmd_ruling(o, out); }; });

  s = app.add_subcommand("rotor3d-sweep", "Circumscribed tetrahedron volume and normal ruling per rotation (CSV)");
  body(s), tetra(s), samples(s), tol(s), seed(s), add_common(s);
  s->callback([&] { action = [&] { return cmd_rotor3d_sweep(o, out); }; });

  s = app.add_subcommand("theorem4", "Contact normals of a rotor belong to one ruling");
  body(s), tetra(s), samples(s), tol(s), seed(s), add_common(s);
  s->callback([&] { action = [&] { return cmd_normal_ruling(o, out, err); }; });

  s = app.add_subcommand("search-rotor", "Search for a rotor of a tetrahedron");
  tetra(s), samples(s), seed(s), add_common(s);
  s->add_option("--degrees", o.degrees, "Harmonic degrees of the basis")->delimiter(',');
  s->add_option("--steps", o.steps, "Simplex iterations");
  s->callback([&] { action = [&] { return cmd_search_rotor(o, out); }; });

  s = app.add_subcommand("render", "SVG figure of the body in its triangle");
  body(s), triangle(s), samples(s), add_common(s);
  s->add_option("--rotation", o.rotation, "Triangle rotation in radians");
  s->add_option("--svg-dir", o.svg_dir, "Write a sweep of frames into this directory");
  s->callback([&] { action = [&] { return cmd_render(o, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitCheckFailed;
  }
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace rotors::cli
