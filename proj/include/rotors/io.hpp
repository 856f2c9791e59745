#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "rotors/immobilize.hpp"
#include "rotors/lines3d.hpp"
#include "rotors/rotor3d.hpp"
#include "rotors/sliding.hpp"
#include "rotors/support2d.hpp"
#include "rotors/triangle_rotor.hpp"

namespace rotors::io {

using nlohmann::json;

// Schemas:
//   body 2D   {"c0": number, "harmonics": [[k, a_k, b_k], ...]}
//   triangle  {"psi": [psi1, psi2, psi3], "inradius": number}
//   body 3D   {"c0": number, "terms": [[l, m, coeff], ...]}
//   tetra     {"nu": [[x,y,z] x 4], "inradius": number}
//   line      {"p": [x,y,z], "d": [x,y,z]}
//   lines     [line x 4] or {"lines": [line x 4]}
// Parse failures throw Error(InvalidInput) naming the offending field.

json to_json(const SupportFunction2D& h);
SupportFunction2D support2d_from_json(const json& j);

json to_json(const TriangleShape& t);
TriangleShape triangle_from_json(const json& j);

json to_json(const SupportFunction3D& h);
SupportFunction3D support3d_from_json(const json& j);

json to_json(const TetrahedronShape& t);
TetrahedronShape tetra_from_json(const json& j);

/// A line is stored as a point and a direction; the point written out is the
/// foot of the perpendicular from the origin.
json to_json(const PlueckerLine& l);
PlueckerLine line_from_json(const json& j);
std::array<PlueckerLine, 4> lines_from_json(const json& j);

json to_json(const RulingClassification& c);
json to_json(const ImmobilizationReport& r);
json to_json(const NormalRulingReport& r);

/// Reads and parses a JSON file (InvalidInput on I/O or syntax errors).
json read_json_file(const std::filesystem::path& path);

/// Shortest decimal text that reads back to the same double.
std::string format_number(double v);

std::string contact_csv_header();
/// One contact row followed by the identity residual.
std::string contact_csv_row(const ContactData& cd, double identity_residual);

std::string sliding_csv_header();
std::string sliding_csv_row(const SlidingTraceRow& row);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row);

}  // namespace rotors::io
