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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "blochorbit/blochorbit.hpp"

namespace blochorbit::io {

using json = nlohmann::json;

/// Malformed input (bad JSON, wrong shapes, unknown keys). Maps to exit code 1.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Display scaling: coherence (1) or Bloch (2) normalization.
enum class Normalization { coherence, bloch };

Normalization parse_normalization(const std::string& name);
double display_scale(Normalization n);

/// Accepts {"r1","r2","T"} or {"rho": [[re, im] x 16]}. A "rho" that is not
/// a density matrix throws std::invalid_argument (domain error).
TwoQubitState parse_state(const json& j);

/// {"kind": "local"|"one_dim"|"heisenberg"|"cartan", ...}. Throws ParseError,
/// including for specs that fail check_spec.
InteractionSpec parse_spec(const json& j);

/// Parameter p with at_parameter(spec, p) == spec.
double spec_parameter(const InteractionSpec& spec);

json to_json(const Vec3& v, double scale = 1.0);
json to_json(const Mat3& m, double scale = 1.0);
json to_json(const TwoQubitState& s, Normalization n = Normalization::coherence);
json to_json(const InteractionSpec& spec);
json to_json(const ValidationReport& r);
json to_json(const EllipseParams& e, Normalization n = Normalization::coherence);
json to_json(const ReachableDisk& d, Normalization n = Normalization::coherence);

/// Parses text as JSON, throwing ParseError with the parser's message.
json parse_json(const std::string& text);

// Orbit CSV: phi, r1x..r1z, r2x..r2z, Txx..Tzz; 17 significant digits.
extern const char* const kOrbitHeader;
std::string format_number(double x);
std::string orbit_csv_row(double phi, const TwoQubitState& s, Normalization n);

struct CsvRow {
  double phi = 0.0;
  TwoQubitState state;
};

/// Parses an orbit CSV (header required). Values are read as coherence
/// normalized. Throws ParseError.
std::vector<CsvRow> parse_orbit_csv(const std::string& text);

}  // namespace blochorbit::io
