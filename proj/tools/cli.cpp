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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "io.hpp"

namespace blochorbit::cli {

namespace {

using io::json;
using io::Normalization;
using io::ParseError;

struct RunConfig {
  std::string input;
  std::string output = "-";
  std::string format = "json";
  std::string spec;
  std::string normalization = "coherence";
  double phi_max = 2 * std::numbers::pi;
  int samples = -1;
  std::uint64_t seed = 5489u;
  int subsystem = 1;
  int steps = 1;
  bool corollary = false;
  std::string cloud;
};

// Input is either "-", inline JSON (starts with '{'), or a file path.
std::string read_source(const std::string& source, std::istream& in) {
  if (source == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return source;
  std::ifstream f(source, std::ios::binary);
  if (!f) throw ParseError("cannot read \"" + source + "\"");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

bool looks_like_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

TwoQubitState load_state(const RunConfig& cfg, std::istream& in) {
  const TwoQubitState s = io::parse_state(io::parse_json(read_source(cfg.input, in)));
  const ValidationReport rep = validate(s);
  if (!rep.valid()) {
    std::string msg = "input is not a valid two-qubit state";
    for (const auto& v : rep.violations) msg += "; " + v;
    throw std::domain_error(msg);
  }
  return s;
}

InteractionSpec load_spec(const RunConfig& cfg, std::istream& in) {
  if (cfg.spec.empty()) throw ParseError("--spec is required for this command");
  return io::parse_spec(io::parse_json(read_source(cfg.spec, in)));
}

std::string csv_table(const std::vector<std::pair<double, TwoQubitState>>& rows, Normalization n) {
  std::string text = std::string(io::kOrbitHeader) + "\n";
  for (const auto& [phi, s] : rows) text += io::orbit_csv_row(phi, s, n) + "\n";
  return text;
}

int cmd_state(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Normalization norm = io::parse_normalization(cfg.normalization);
  const std::string text = read_source(cfg.input, in);

  if (!looks_like_json(text)) {
    // An orbit CSV: validate every row.
    const std::vector<io::CsvRow> rows = io::parse_orbit_csv(text);
    json invalid = json::array();
    int products = 0;
    std::vector<std::pair<double, TwoQubitState>> table;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const ValidationReport rep = validate(rows[r].state);
      if (!rep.valid()) invalid.push_back(r);
      if (rep.product) ++products;
      table.emplace_back(rows[r].phi, rows[r].state);
    }
    if (cfg.format == "csv")
      write_output(cfg.output, csv_table(table, norm), out);
    else
      write_output(cfg.output,
                   dump(json{{"rows", rows.size()},
                             {"valid", invalid.empty()},
                             {"invalid_rows", invalid},
                             {"product_rows", products}}),
                   out);
    return invalid.empty() ? kExitOk : kExitDomain;
  }

  const TwoQubitState s = io::parse_state(io::parse_json(text));
  const ValidationReport rep = validate(s);
  if (cfg.format == "csv") {
    write_output(cfg.output, csv_table({{0.0, s}}, norm), out);
  } else {
    json j = io::to_json(s, norm);
    j["valid"] = rep.valid();
    j["product"] = rep.product;
    j["validation"] = io::to_json(rep);
    j["normalization"] = cfg.normalization;
    write_output(cfg.output, dump(j), out);
  }
  return rep.valid() ? kExitOk : kExitDomain;
}

int cmd_evolve(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Normalization norm = io::parse_normalization(cfg.normalization);
  const InteractionSpec spec = load_spec(cfg, in);
  const TwoQubitState s = load_state(cfg, in);
  const TwoQubitState result = apply_interaction(s, spec);
  if (cfg.format == "csv") {
    write_output(cfg.output, csv_table({{io::spec_parameter(spec), result}}, norm), out);
  } else {
    json j = io::to_json(result, norm);
    j["spec"] = io::to_json(spec);
    j["normalization"] = cfg.normalization;
    write_output(cfg.output, dump(j), out);
  }
  return kExitOk;
}

int cmd_orbit(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Normalization norm = io::parse_normalization(cfg.normalization);
  const int n = cfg.samples < 0 ? 65 : cfg.samples;
  if (n < 2) throw ParseError("--samples must be at least 2 for an orbit");
  if (!std::isfinite(cfg.phi_max) || cfg.phi_max < 0)
    throw ParseError("--phi-max must be finite and non-negative");
  const InteractionSpec spec = load_spec(cfg, in);
  const TwoQubitState s = load_state(cfg, in);
  const OrbitTrace trace = trace_orbit(s, spec, cfg.phi_max, n);

  if (cfg.format == "csv") {
    std::vector<std::pair<double, TwoQubitState>> rows;
    for (const auto& sample : trace.samples) rows.emplace_back(sample.phi, sample.state);
    write_output(cfg.output, csv_table(rows, norm), out);
    return kExitOk;
  }
  json samples = json::array();
  for (const auto& sample : trace.samples) {
    json row = io::to_json(sample.state, norm);
    row["phi"] = sample.phi;
    samples.push_back(row);
  }
  write_output(cfg.output,
               dump(json{{"spec", io::to_json(spec)},
                         {"phi_max", cfg.phi_max},
                         {"normalization", cfg.normalization},
                         {"samples", samples}}),
               out);
  return kExitOk;
}

int cmd_ellipse(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.format != "json") throw ParseError("ellipse output is JSON only");
  const Normalization norm = io::parse_normalization(cfg.normalization);
  const InteractionSpec spec = load_spec(cfg, in);
  const TwoQubitState s = load_state(cfg, in);
  const Subsystem which = parse_subsystem(cfg.subsystem);

  json j;
  if (const auto* o = std::get_if<OneDimInteraction>(&spec)) {
    j = io::to_json(fit_one_dim(s, which, o->i, o->j), norm);
    const ChiEstimate est = chi_closed_form(s, which, o->i, o->j);
    j["chi_closed_form"] = est.indeterminate ? json(nullptr) : json(est.chi);
    if (cfg.corollary) {
      if (!validate(s).product)
        throw std::domain_error("the semi-minor corollary needs a product state");
      j["b_closed_form"] = io::display_scale(norm) * semi_minor_product(s, which, o->i, o->j);
    }
  } else if (const auto* h = std::get_if<HeisenbergExchange>(&spec)) {
    if (cfg.corollary) throw ParseError("--corollary applies to one_dim specs only");
    j = io::to_json(heisenberg_ellipse(s, h->coupling, which), norm);
  } else {
    throw ParseError("ellipse needs a one_dim or heisenberg spec");
  }
  j["subsystem"] = cfg.subsystem;
  j["normalization"] = cfg.normalization;
  write_output(cfg.output, dump(j), out);
  return kExitOk;
}

int cmd_reachable(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.format != "json") throw ParseError("reachable output is JSON only");
  const Normalization norm = io::parse_normalization(cfg.normalization);
  const int n = cfg.samples < 0 ? 0 : cfg.samples;
  if (!cfg.cloud.empty() && n == 0) throw ParseError("--cloud needs --samples > 0");
  if (cfg.steps < 1) throw ParseError("--steps must be at least 1");
  const InteractionSpec spec = load_spec(cfg, in);
  const auto* o = std::get_if<OneDimInteraction>(&spec);
  if (o == nullptr) throw ParseError("reachable needs a one_dim spec");
  const TwoQubitState s = load_state(cfg, in);

  const ReachableDisk disk = reachable_disk(s, o->i, o->j);
  json j = io::to_json(disk, norm);
  j["samples"] = n;
  j["normalization"] = cfg.normalization;
  if (n > 0) {
    const std::vector<Vec3> cloud = sample_reachable_sequences(s, o->i, o->j, n, cfg.steps, cfg.seed);
    double worst = 0.0;
    for (const Vec3& r : cloud) worst = std::max(worst, disk.ellipse_value(r));
    const std::vector<double> gaps = boundary_gaps(disk, cloud);
    j["seed"] = cfg.seed;
    j["steps"] = cfg.steps;
    j["max_ellipse_value"] = worst;
    j["max_boundary_gap"] = io::display_scale(norm) * *std::max_element(gaps.begin(), gaps.end());
    if (!cfg.cloud.empty()) {
      const double k = io::display_scale(norm);
      std::string text = "r1x,r1y,r1z\n";
      for (const Vec3& r : cloud)
        text += io::format_number(k * r.x()) + "," + io::format_number(k * r.y()) + "," +
                io::format_number(k * r.z()) + "\n";
      write_output(cfg.cloud, text, out);
    }
  }
  write_output(cfg.output, dump(j), out);
  return kExitOk;
}

int cmd_entangle(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const int n = cfg.samples < 0 ? 256 : cfg.samples;
  if (n < 16) throw ParseError("--samples must be at least 16 for an entanglement scan");
  const InteractionSpec spec = load_spec(cfg, in);
  const auto* h = std::get_if<HeisenbergExchange>(&spec);
  if (h == nullptr) throw ParseError("entangle needs a heisenberg spec");
  const TwoQubitState s = load_state(cfg, in);
  const EntanglementReport rep = heisenberg_entanglement_scan(s, h->coupling, n);

  if (cfg.format == "csv") {
    std::string text = "phi,entropy1,entropy2\n";
    for (std::size_t t = 0; t < rep.phi_grid.size(); ++t)
      text += io::format_number(rep.phi_grid[t]) + "," + io::format_number(rep.entropy1[t]) + "," +
              io::format_number(rep.entropy2[t]) + "\n";
    write_output(cfg.output, text, out);
    return kExitOk;
  }
  json grid = json::array();
  for (std::size_t t = 0; t < rep.phi_grid.size(); ++t)
    grid.push_back({{"phi", rep.phi_grid[t]}, {"entropy1", rep.entropy1[t]}, {"entropy2", rep.entropy2[t]}});
  const Normalization norm = io::parse_normalization(cfg.normalization);
  write_output(cfg.output,
               dump(json{{"coupling", rep.coupling},
                         {"phi_star", rep.phi_star},
                         {"max_entropy", rep.max_entropy},
                         {"maximal", rep.maximal},
                         {"state_at_phi_star", io::to_json(apply_heisenberg(s, h->coupling, rep.phi_star), norm)},
                         {"normalization", cfg.normalization},
                         {"grid", grid}}),
               out);
  return kExitOk;
}

}  // namespace

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    out.flush();
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ParseError("cannot write \"" + tmp.string() + "\"");
    f << text;
    f.close();
    if (!f) throw ParseError("failed writing \"" + tmp.string() + "\"");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ParseError("cannot move output into place at \"" + path + "\"");
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Two-qubit coherence-vector dynamics", "blochorbit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "State: file path, '-' for stdin, or inline JSON")
        ->required();
    sub->add_option("--output", cfg.output, "Output path or '-' for stdout");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--normalization", cfg.normalization, "coherence or bloch (display only)")
        ->check(CLI::IsMember({"coherence", "bloch"}));
  };

  CLI::App* state = app.add_subcommand("state", "Validate a state and print its coherence form");
  common(state);
  CLI::App* evolve = app.add_subcommand("evolve", "Apply one interaction to a state");
  common(evolve);
  evolve->add_option("--spec", cfg.spec, "Interaction spec JSON")->required();
  CLI::App* orbit = app.add_subcommand("orbit", "Trace a state along a one-parameter family");
  common(orbit);
  orbit->add_option("--spec", cfg.spec, "Interaction spec JSON")->required();
  orbit->add_option("--phi-max", cfg.phi_max, "Largest orbit parameter");
  orbit->add_option("--samples", cfg.samples, "Number of grid points (>= 2)");
  CLI::App* ellipse = app.add_subcommand("ellipse", "Fit the orbit ellipse of one subsystem");
  common(ellipse);
  ellipse->add_option("--spec", cfg.spec, "one_dim or heisenberg spec JSON")->required();
  ellipse->add_option("--subsystem", cfg.subsystem, "1 or 2")->check(CLI::IsMember({1, 2}));
  ellipse->add_flag("--corollary", cfg.corollary, "Also report the product-state semi-minor axis");
  CLI::App* reachable = app.add_subcommand("reachable", "Reachable disk of subsystem 1");
  common(reachable);
  reachable->add_option("--spec", cfg.spec, "one_dim spec JSON naming i and j")->required();
  reachable->add_option("--samples", cfg.samples, "Number of random control sequences");
  reachable->add_option("--seed", cfg.seed, "Sampling seed");
  reachable->add_option("--steps", cfg.steps, "Rotation/interaction pairs per sequence");
  reachable->add_option("--cloud", cfg.cloud, "Write sampled r1 points as CSV");
  CLI::App* entangle = app.add_subcommand("entangle", "Heisenberg entanglement scan");
  common(entangle);
  entangle->add_option("--spec", cfg.spec, "heisenberg spec JSON")->required();
  entangle->add_option("--samples", cfg.samples, "Number of grid points (>= 16)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (state->parsed()) return cmd_state(cfg, in, out);
    if (evolve->parsed()) return cmd_evolve(cfg, in, out);
    if (orbit->parsed()) return cmd_orbit(cfg, in, out);
    if (ellipse->parsed()) return cmd_ellipse(cfg, in, out);
    if (reachable->parsed()) return cmd_reachable(cfg, in, out);
    if (entangle->parsed()) return cmd_entangle(cfg, in, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace blochorbit::cli
