#include "rotors/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "rotors/error.hpp"
#include "rotors/spherical_harmonics.hpp"

namespace rotors::io {

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw Error(ErrorKind::InvalidInput, "field '" + field + "': " + why);
}

const json& member(const json& j, const std::string& key, const std::string& context) {
  if (!j.is_object()) bad_field(context, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad_field(context.empty() ? key : context + "." + key, "missing");
  return *it;
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) bad_field(field, "expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& field) {
  if (!j.is_number_integer()) bad_field(field, "expected an integer");
  return j.get<int>();
}

const json& array(const json& j, const std::string& field, std::size_t size = 0) {
  if (!j.is_array()) bad_field(field, "expected an array");
  if (size != 0 && j.size() != size) bad_field(field, "expected " + std::to_string(size) + " entries");
  return j;
}

Vec3 vec3(const json& j, const std::string& field) {
  array(j, field, 3);
  return {number(j[0], field + "[0]"), number(j[1], field + "[1]"), number(j[2], field + "[2]")};
}

json vec3_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

}  // namespace

json to_json(const SupportFunction2D& h) {
  json harmonics = json::array();
  for (const auto& [k, a, b] : h.harmonics()) harmonics.push_back(json::array({k, a, b}));
  return {{"c0", h.c0()}, {"harmonics", harmonics}};
}

SupportFunction2D support2d_from_json(const json& j) {
  const double c0 = number(member(j, "c0", ""), "c0");
  std::vector<Harmonic> harmonics;
  if (j.contains("harmonics")) {
    const auto& arr = array(j["harmonics"], "harmonics");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string field = "harmonics[" + std::to_string(i) + "]";
      array(arr[i], field, 3);
      const int k = integer(arr[i][0], field + "[0]");
      if (k < 1) bad_field(field + "[0]", "harmonic order must be >= 1");
      harmonics.push_back({k, number(arr[i][1], field + "[1]"), number(arr[i][2], field + "[2]")});
    }
  }
  return SupportFunction2D(c0, std::move(harmonics));
}

json to_json(const TriangleShape& t) {
  return {{"psi", json::array({t.psi[0], t.psi[1], t.psi[2]})}, {"inradius", t.inradius}};
}

TriangleShape triangle_from_json(const json& j) {
  TriangleShape t;
  const auto& psi = array(member(j, "psi", ""), "psi", 3);
  for (int i = 0; i < 3; ++i) t.psi[i] = number(psi[i], "psi[" + std::to_string(i) + "]");
  t.inradius = number(member(j, "inradius", ""), "inradius");
  if (!(t.inradius > 0.0)) bad_field("inradius", "must be positive");
  return t;
}

json to_json(const SupportFunction3D& h) {
  json terms = json::array();
  for (const auto& t : h.terms()) terms.push_back(json::array({t.l, t.m, t.coeff}));
  return {{"c0", h.c0()}, {"terms", terms}};
}

SupportFunction3D support3d_from_json(const json& j) {
  const double c0 = number(member(j, "c0", ""), "c0");
  std::vector<ShTerm> terms;
  if (j.contains("terms")) {
    const auto& arr = array(j["terms"], "terms");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string field = "terms[" + std::to_string(i) + "]";
      array(arr[i], field, 3);
      const int l = integer(arr[i][0], field + "[0]");
      const int m = integer(arr[i][1], field + "[1]");
      if (l < 1 || l > kMaxDegree || std::abs(m) > l) {
        bad_field(field, "needs 1 <= l <= " + std::to_string(kMaxDegree) + " and |m| <= l");
      }
      terms.push_back({l, m, number(arr[i][2], field + "[2]")});
    }
  }
  return SupportFunction3D(c0, std::move(terms));
}

json to_json(const TetrahedronShape& t) {
  json nu = json::array();
  for (const auto& n : t.nu) nu.push_back(vec3_json(n));
  return {{"nu", nu}, {"inradius", t.inradius}};
}

TetrahedronShape tetra_from_json(const json& j) {
  TetrahedronShape t;
  const auto& nu = array(member(j, "nu", ""), "nu", 4);
  for (int i = 0; i < 4; ++i) {
    const Vec3 n = vec3(nu[i], "nu[" + std::to_string(i) + "]");
    if (!(n.norm() > 0.0)) bad_field("nu[" + std::to_string(i) + "]", "zero normal");
    t.nu[i] = n.normalized();
  }
  t.inradius = number(member(j, "inradius", ""), "inradius");
  if (!(t.inradius > 0.0)) bad_field("inradius", "must be positive");
  return t;
}

json to_json(const PlueckerLine& l) { return {{"p", vec3_json(l.foot())}, {"d", vec3_json(l.d)}}; }

PlueckerLine line_from_json(const json& j) {
  const Vec3 p = vec3(member(j, "p", "line"), "p");
  const Vec3 d = vec3(member(j, "d", "line"), "d");
  if (!(d.norm() > 0.0)) bad_field("d", "direction has zero length");
  return pluecker(p, d);
}

std::array<PlueckerLine, 4> lines_from_json(const json& j) {
  const json& arr = j.is_object() ? member(j, "lines", "") : j;
  array(arr, "lines", 4);
  std::array<PlueckerLine, 4> out;
  for (int i = 0; i < 4; ++i) {
    try {
      out[i] = line_from_json(arr[i]);
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidInput, "lines[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return out;
}

json to_json(const RulingClassification& c) {
  json out;
  out["verdict"] = std::string(to_string(c.verdict));
  out["rank"] = c.rank.rank;
  out["singular_values"] = c.rank.singular_values;
  out["sigma_ratio"] = c.rank.sigma_ratio;
  json witnesses = json::object();
  if (c.common_point) witnesses["common_point"] = vec3_json(*c.common_point);
  if (!c.matchings.empty()) {
    json pairs = json::array();
    for (const auto& m : c.matchings) {
      pairs.push_back({{"first", {m.first[0] + 1, m.first[1] + 1}},
                       {"second", {m.second[0] + 1, m.second[1] + 1}},
                       {"p", vec3_json(m.p)},
                       {"q", vec3_json(m.q)}});
    }
    witnesses["matchings"] = pairs;
  }
  if (c.regulus_basis) {
    json basis = json::array();
    for (int col = 0; col < 3; ++col) {
      json v = json::array();
      for (int row = 0; row < 6; ++row) v.push_back((*c.regulus_basis)(row, col));
      basis.push_back(v);
    }
    witnesses["regulus_basis"] = basis;
    witnesses["frame_center"] = vec3_json(c.rank.center);
    witnesses["frame_length"] = c.rank.length;
  }
  out["witnesses"] = witnesses;
  return out;
}

json to_json(const ImmobilizationReport& r) {
  json contacts = json::array();
  const auto& c = r.contacts;
  for (int i = 0; i < 3; ++i) {
    contacts.push_back({{"angle", c.angles[i]},
                        {"x", {c.x[i].x(), c.x[i].y()}},
                        {"kappa", c.kappa[i]},
                        {"r", c.r[i]},
                        {"a", c.a[i]}});
  }
  return {{"omega", r.omega},
          {"decision", std::string(to_string(r.decision))},
          {"center", {c.center.x(), c.center.y()}},
          {"concurrency_residual", c.concurrency_residual},
          {"contacts", contacts}};
}

json to_json(const NormalRulingReport& r) {
  json hist = json::object();
  for (int v = 0; v < 4; ++v) hist[std::string(to_string(static_cast<Verdict>(v)))] = r.histogram[v];
  return {{"is_rotor", r.is_rotor},         {"rotor_defect", r.rotor_defect},
          {"samples", r.samples},           {"worst_sigma_ratio", r.worst_sigma_ratio},
          {"verdicts", hist},               {"skipped", r.skipped}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, "'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

namespace {

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_number(values[i]);
  }
  return out;
}

}  // namespace

std::string contact_csv_header() {
  return "rotation,x1x,x1y,x2x,x2y,x3x,x3y,kappa1,kappa2,kappa3,Ox,Oy,residual,r1,r2,r3,a1,a2,a3,b1,b2,"
         "b3,theorem1_residual";
}

std::string contact_csv_row(const ContactData& cd, double identity_residual) {
  std::vector<double> v{cd.rotation};
  for (const auto& x : cd.x) {
    v.push_back(x.x());
    v.push_back(x.y());
  }
  v.insert(v.end(), cd.kappa.begin(), cd.kappa.end());
  v.push_back(cd.center.x());
  v.push_back(cd.center.y());
  v.push_back(cd.concurrency_residual);
  v.insert(v.end(), cd.r.begin(), cd.r.end());
  v.insert(v.end(), cd.a.begin(), cd.a.end());
  v.insert(v.end(), cd.b.begin(), cd.b.end());
  v.push_back(identity_residual);
  return join(v);
}

std::string sliding_csv_header() { return "theta,fx,fy,P1,P2,P3"; }

std::string sliding_csv_row(const SlidingTraceRow& row) {
  return join({row.t, row.f.x(), row.f.y(), row.support[0], row.support[1], row.support[2]});
}

std::string sweep_csv_header() { return "index,qw,qx,qy,qz,volume,s1,s2,s3,s4,sigma_ratio,verdict"; }

std::string sweep_csv_row(const SweepRow& row) {
  const auto& q = row.rotation;
  return std::to_string(row.index) + "," +
         join({q.w(), q.x(), q.y(), q.z(), row.volume, row.singular_values[0], row.singular_values[1],
               row.singular_values[2], row.singular_values[3], row.sigma_ratio}) +
         "," + std::string(to_string(row.verdict));
}

}  // namespace rotors::io
