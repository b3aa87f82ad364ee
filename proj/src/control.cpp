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

#include "blochorbit/control.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "blochorbit/evolution.hpp"

namespace blochorbit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTiny = 1e-15;
constexpr double kOnSegment = 1e-12;

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec3 v;
  do {
    v = {normal(rng), normal(rng), normal(rng)};
  } while (v.norm() < 1e-12);
  return v.normalized();
}

// One random rotation of Q followed by one random-duration interaction.
TwoQubitState random_step(const TwoQubitState& s, Axis i, Axis j, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  const Vec3 axis = random_unit(rng);
  const double theta = angle(rng);
  const double phi = angle(rng);
  return apply_one_dim(apply_local(s, Subsystem::second, axis, theta), i, j, phi);
}

}  // namespace

Vec3 ReachableDisk::center() const { return fixed_component * plane.normal; }

Vec3 ReachableDisk::major_axis() const {
  return orientation.x() * plane.e1 + orientation.y() * plane.e2;
}

Vec3 ReachableDisk::minor_axis() const {
  return -orientation.y() * plane.e1 + orientation.x() * plane.e2;
}

double ReachableDisk::ellipse_value(const Vec3& r_s) const {
  const Vec3 d = r_s - center();
  const double x = d.dot(major_axis()), y = d.dot(minor_axis());
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (a < kTiny) return std::hypot(x, y) <= kOnSegment ? 0.0 : inf;
  if (b < kTiny) return std::abs(y) <= kOnSegment ? (x / a) * (x / a) : inf;
  return (x / a) * (x / a) + (y / b) * (y / b);
}

double ReachableDisk::boundary_radius(double theta) const {
  const double c = std::cos(theta), s = std::sin(theta);
  if (a < kTiny) return 0.0;
  if (b < kTiny) return std::abs(s) < 1e-12 ? a : 0.0;
  return 1.0 / std::sqrt(c * c / (a * a) + s * s / (b * b));
}

ReachableDisk reachable_disk(const TwoQubitState& s, Axis i, Axis j) {
  if (!validate(s).product)
    throw std::invalid_argument("reachable set analysis needs a product initial state");
  ReachableDisk disk;
  disk.i = i;
  disk.j = j;
  const int ii = index(i), k = index(next(i)), l = index(next(next(i)));
  disk.plane = {Vec3::Unit(k), Vec3::Unit(l), Vec3::Unit(ii)};
  const Eigen::Vector2d in_plane{s.r1[k], s.r1[l]};
  disk.a = in_plane.norm();
  disk.b = 2.0 * s.r2.norm() * disk.a;
  if (disk.a > kTiny) disk.orientation = in_plane / disk.a;
  disk.fixed_component = s.r1[ii];
  return disk;
}

std::vector<Vec3> sample_reachable(const TwoQubitState& s, Axis i, Axis j, int n,
                                   std::uint64_t seed) {
  return sample_reachable_sequences(s, i, j, n, 1, seed);
}

std::vector<Vec3> sample_reachable_sequences(const TwoQubitState& s, Axis i, Axis j, int n,
                                             int steps, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample count must be at least 1");
  if (steps < 1) throw std::invalid_argument("sequence length must be at least 1");
  if (!validate(s).product)
    throw std::invalid_argument("reachable set sampling needs a product initial state");
  std::mt19937_64 rng(seed);
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    TwoQubitState st = s;
    for (int k = 0; k < steps; ++k) st = random_step(st, i, j, rng);
    out.push_back(st.r1);
  }
  return out;
}

std::vector<double> boundary_gaps(const ReachableDisk& disk, const std::vector<Vec3>& samples,
                                  int directions) {
  if (directions < 1) throw std::invalid_argument("need at least one probe direction");
  std::vector<double> best(static_cast<std::size_t>(directions), 0.0);
  const double half_width = kPi / directions;
  const bool flat = disk.b < kTiny;
  for (const Vec3& p : samples) {
    const Vec3 d = p - disk.center();
    const double x = d.dot(disk.major_axis()), y = d.dot(disk.minor_axis());
    if (disk.a < kTiny) continue;
    // Eccentric angle and normalized radius.
    const double ex = x / disk.a, ey = flat ? 0.0 : y / disk.b;
    const double rho = std::hypot(ex, ey);
    const double t = std::atan2(ey, ex);
    for (int m = 0; m < directions; ++m) {
      const double probe = 2 * kPi * m / directions;
      if (std::abs(std::remainder(t - probe, 2 * kPi)) <= half_width)
        best[m] = std::max(best[m], rho);
    }
  }
  std::vector<double> gaps(best.size());
  for (int m = 0; m < directions; ++m) {
    const double probe = 2 * kPi * m / directions;
    const double bx = disk.a * std::cos(probe), by = disk.b * std::sin(probe);
    gaps[m] = std::hypot(bx, by) * std::max(0.0, 1.0 - best[m]);
  }
  return gaps;
}

EntanglementReport heisenberg_entanglement_scan(const TwoQubitState& s, double coupling, int n) {
  if (n < 16) throw std::invalid_argument("entanglement scan needs at least 16 grid points");
  if (!std::isfinite(coupling)) throw std::invalid_argument("coupling must be finite");
  EntanglementReport rep;
  rep.coupling = coupling;
  const double period = coupling != 0.0 ? kPi / std::abs(coupling) : 2 * kPi;

  auto mean_entropy = [](const TwoQubitState& st) {
    return 0.5 * (linear_entropy(st, Subsystem::first) + linear_entropy(st, Subsystem::second));
  };

  rep.phi_grid.reserve(n);
  rep.entropy1.reserve(n);
  rep.entropy2.reserve(n);
  rep.max_entropy = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < n; ++t) {
    const double phi = t == n - 1 ? period : period * t / (n - 1);
    const TwoQubitState st = apply_heisenberg(s, coupling, phi);
    rep.phi_grid.push_back(phi);
    rep.entropy1.push_back(linear_entropy(st, Subsystem::first));
    rep.entropy2.push_back(linear_entropy(st, Subsystem::second));
    const double e = mean_entropy(st);
    if (e > rep.max_entropy) {
      rep.max_entropy = e;
      rep.phi_star = phi;
    }
  }

  // Mean entropy is 1/2 - 2|R|^2 - 2|S cos u + V sin u|^2 with u = 2 c phi;
  // the last term is A cos 2u + B sin 2u + const.
  if (coupling != 0.0) {
    const Vec3 diff = (s.r1 - s.r2) / 2.0;
    Vec3 twist;
    for (int a = 0; a < 3; ++a) {
      const int b = (a + 1) % 3, d = (a + 2) % 3;
      twist[a] = (s.T(d, b) - s.T(b, d)) / 2.0;
    }
    const double amp_cos = 0.5 * (diff.squaredNorm() - twist.squaredNorm());
    const double amp_sin = diff.dot(twist);
    if (std::hypot(amp_cos, amp_sin) > 0.0) {
      const double u = 0.5 * (std::atan2(amp_sin, amp_cos) + kPi);
      const double half_period = kPi / (2.0 * std::abs(coupling));
      double phi = u / (2.0 * coupling);
      phi = std::fmod(phi, half_period);
      if (phi < 0) phi += half_period;
      const TwoQubitState st = apply_heisenberg(s, coupling, phi);
      const double e = mean_entropy(st);
      if (e >= rep.max_entropy) {
        rep.max_entropy = e;
        rep.phi_star = phi;
      }
    }
  }

  const TwoQubitState best = apply_heisenberg(s, coupling, rep.phi_star);
  rep.maximal = best.r1.norm() < kMaximalNormTol && best.r2.norm() < kMaximalNormTol &&
                global_purity(best) > 1.0 - kMaximalPurityTol;
  return rep;
}

}  // namespace blochorbit
