// Copyright 2026 The blochorbit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace blochorbit::io {

namespace {

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  return j.get<double>();
}

Vec3 vec3(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3)
    throw ParseError(std::string(what) + ": expected an array of 3 numbers");
  return {number(j[0], what), number(j[1], what), number(j[2], what)};
}

Axis axis(const json& j, const char* what) {
  try {
    if (j.is_string()) return parse_axis(j.get<std::string>());
    if (j.is_number_integer()) return parse_axis(std::to_string(j.get<int>()));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
  throw ParseError(std::string(what) + ": expected an axis name");
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ParseError("unknown field \"" + it.key() + "\"");
  }
}

double optional(const json& j, const char* key, double fallback) {
  auto it = j.find(key);
  return it == j.end() ? fallback : number(*it, key);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(std::string cell, int line_no) {
  while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.back()))) cell.pop_back();
  std::size_t start = 0;
  while (start < cell.size() && std::isspace(static_cast<unsigned char>(cell[start]))) ++start;
  double x = 0.0;
  const char* b = cell.data() + start;
  const char* e = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(b, e, x);
  if (ec != std::errc() || ptr != e || b == e)
    throw ParseError("line " + std::to_string(line_no) + ": bad number \"" + cell + "\"");
  return x;
}

std::string axis_label(Axis a) { return std::string(1, axis_name(a)); }

}  // namespace

Normalization parse_normalization(const std::string& name) {
  if (name == "coherence") return Normalization::coherence;
  if (name == "bloch") return Normalization::bloch;
  throw ParseError("normalization must be coherence or bloch, got \"" + name + "\"");
}

double display_scale(Normalization n) { return n == Normalization::bloch ? 2.0 : 1.0; }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

TwoQubitState parse_state(const json& j) {
  if (!j.is_object()) throw ParseError("state: expected a JSON object");
  if (j.contains("rho")) {
    reject_unknown(j, {"rho"});
    const json& rho = j["rho"];
    if (!rho.is_array() || rho.size() != 16)
      throw ParseError("rho: expected 16 [re, im] entries in row-major order");
    Matrix4c m;
    for (int k = 0; k < 16; ++k) {
      const json& e = rho[k];
      if (!e.is_array() || e.size() != 2) throw ParseError("rho: each entry must be [re, im]");
      m(k / 4, k % 4) = cplx{number(e[0], "rho"), number(e[1], "rho")};
    }
    return from_density(DensityMatrix4(m));
  }
  reject_unknown(j, {"r1", "r2", "T"});
  TwoQubitState s;
  s.r1 = vec3(field(j, "r1"), "r1");
  s.r2 = vec3(field(j, "r2"), "r2");
  const json& t = field(j, "T");
  if (!t.is_array() || t.size() != 3) throw ParseError("T: expected 3 rows");
  for (int r = 0; r < 3; ++r) s.T.row(r) = vec3(t[r], "T").transpose();
  return s;
}

InteractionSpec parse_spec(const json& j) {
  if (!j.is_object()) throw ParseError("spec: expected a JSON object");
  const json& kind_field = field(j, "kind");
  if (!kind_field.is_string()) throw ParseError("spec kind must be a string");
  const std::string kind = kind_field.get<std::string>();
  InteractionSpec spec;
  if (kind == "local") {
    reject_unknown(j, {"kind", "target", "axis", "angle"});
    const json& target = field(j, "target");
    if (!target.is_number_integer()) throw ParseError("target must be 1 or 2");
    LocalRotation l;
    try {
      l.target = parse_subsystem(target.get<int>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    l.axis = vec3(field(j, "axis"), "axis");
    l.angle = optional(j, "angle", 0.0);
    spec = l;
  } else if (kind == "one_dim") {
    reject_unknown(j, {"kind", "i", "j", "phi"});
    spec = OneDimInteraction{axis(field(j, "i"), "i"), axis(field(j, "j"), "j"),
                             optional(j, "phi", 0.0)};
  } else if (kind == "heisenberg") {
    reject_unknown(j, {"kind", "c", "phi"});
    spec = HeisenbergExchange{number(field(j, "c"), "c"), optional(j, "phi", 0.0)};
  } else if (kind == "cartan") {
    reject_unknown(j, {"kind", "c"});
    const Vec3 c = vec3(field(j, "c"), "c");
    spec = CartanInteraction{c[0], c[1], c[2]};
  } else {
    throw ParseError("unknown spec kind \"" + kind + "\"");
  }
  try {
    check_spec(spec);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid spec: ") + e.what());
  }
  return spec;
}

double spec_parameter(const InteractionSpec& spec) {
  if (const auto* l = std::get_if<LocalRotation>(&spec)) return l->angle;
  if (const auto* o = std::get_if<OneDimInteraction>(&spec)) return o->phi;
  if (const auto* h = std::get_if<HeisenbergExchange>(&spec)) return h->phi;
  return 1.0;
}

json to_json(const Vec3& v, double scale) {
  return json::array({scale * v[0], scale * v[1], scale * v[2]});
}

json to_json(const Mat3& m, double scale) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r) rows.push_back(to_json(Vec3(m.row(r).transpose()), scale));
  return rows;
}

json to_json(const TwoQubitState& s, Normalization n) {
  const double k = display_scale(n);
  return json{{"r1", to_json(s.r1, k)}, {"r2", to_json(s.r2, k)}, {"T", to_json(s.T, k)}};
}

json to_json(const InteractionSpec& spec) {
  if (const auto* l = std::get_if<LocalRotation>(&spec))
    return json{{"kind", "local"},
                {"target", static_cast<int>(l->target)},
                {"axis", to_json(l->axis)},
                {"angle", l->angle}};
  if (const auto* o = std::get_if<OneDimInteraction>(&spec))
    return json{{"kind", "one_dim"}, {"i", axis_label(o->i)}, {"j", axis_label(o->j)}, {"phi", o->phi}};
  if (const auto* h = std::get_if<HeisenbergExchange>(&spec))
    return json{{"kind", "heisenberg"}, {"c", h->coupling}, {"phi", h->phi}};
  const auto& c = std::get<CartanInteraction>(spec);
  return json{{"kind", "cartan"}, {"c", json::array({c.c1, c.c2, c.c3})}};
}

json to_json(const ValidationReport& r) {
  return json{{"valid", r.valid()},
              {"finite", r.finite},
              {"positive", r.positive},
              {"norms_ok", r.norms_ok},
              {"hermitian_error", r.hermitian_error},
              {"trace_error", r.trace_error},
              {"min_eigenvalue", r.min_eigenvalue},
              {"r1_norm", r.r1_norm},
              {"r2_norm", r.r2_norm},
              {"product_residual", r.product_residual},
              {"violations", r.violations}};
}

json to_json(const EllipseParams& e, Normalization n) {
  const double k = display_scale(n);
  return json{{"a", k * e.a},
              {"b", k * e.b},
              {"psi", e.psi},
              {"chi", e.chi},
              {"orientation", e.orientation},
              {"rate", e.rate},
              {"plane",
               {{"e1", to_json(e.plane.e1)}, {"e2", to_json(e.plane.e2)}, {"normal", to_json(e.plane.normal)}}},
              {"center", to_json(e.center, k)},
              {"degeneracy", to_string(e.degeneracy)}};
}

json to_json(const ReachableDisk& d, Normalization n) {
  const double k = display_scale(n);
  return json{{"i", axis_label(d.i)},
              {"j", axis_label(d.j)},
              {"a", k * d.a},
              {"b", k * d.b},
              {"center", to_json(d.center(), k)},
              {"major_axis", to_json(d.major_axis())},
              {"minor_axis", to_json(d.minor_axis())},
              {"plane",
               {{"e1", to_json(d.plane.e1)}, {"e2", to_json(d.plane.e2)}, {"normal", to_json(d.plane.normal)}}}};
}

const char* const kOrbitHeader =
    "phi,r1x,r1y,r1z,r2x,r2y,r2z,Txx,Txy,Txz,Tyx,Tyy,Tyz,Tzx,Tzy,Tzz";

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string orbit_csv_row(double phi, const TwoQubitState& s, Normalization n) {
  const double k = display_scale(n);
  std::string row = format_number(phi);
  for (int a = 0; a < 3; ++a) row += "," + format_number(k * s.r1[a]);
  for (int a = 0; a < 3; ++a) row += "," + format_number(k * s.r2[a]);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) row += "," + format_number(k * s.T(r, c));
  return row;
}

std::vector<CsvRow> parse_orbit_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header = false;
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header) {
      if (line != kOrbitHeader) throw ParseError("CSV header must be \"" + std::string(kOrbitHeader) + "\"");
      header = true;
      continue;
    }
    const std::vector<std::string> cells = split(line);
    if (cells.size() != 16)
      throw ParseError("line " + std::to_string(line_no) + ": expected 16 columns, got " +
                       std::to_string(cells.size()));
    std::array<double, 16> v;
    for (int c = 0; c < 16; ++c) v[c] = parse_double(cells[c], line_no);
    CsvRow row;
    row.phi = v[0];
    row.state.r1 = {v[1], v[2], v[3]};
    row.state.r2 = {v[4], v[5], v[6]};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) row.state.T(r, c) = v[7 + 3 * r + c];
    rows.push_back(row);
  }
  if (!header) throw ParseError("empty CSV input");
  return rows;
}

}  // namespace blochorbit::io
