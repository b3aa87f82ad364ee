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

#include <cstdint>
#include <vector>

#include "blochorbit/ellipse.hpp"
#include "blochorbit/state.hpp"

namespace blochorbit {

/// Reachable set of system S (subsystem 1) under full local control of the
/// controller Q (subsystem 2) plus the interaction sigma_i (x) sigma_j.
///
/// An elliptical disk in the plane r_S^i = fixed_component, with semi-axis a
/// along the in-plane part of r_S(0) and b = 2 |r_Q(0)| a.
struct ReachableDisk {
  Axis i = Axis::z;
  Axis j = Axis::z;
  OrbitPlane plane;          ///< e1, e2 = (k, l) axes, normal = i axis
  double a = 0.0;
  double b = 0.0;
  Eigen::Vector2d orientation{1.0, 0.0};  ///< unit a-direction in (e1, e2)
  double fixed_component = 0.0;

  Vec3 center() const;
  Vec3 major_axis() const;
  Vec3 minor_axis() const;

  /// (x/a)^2 + (y/b)^2 of the in-plane offset; <= 1 inside. Degenerate disks
  /// (b or a ~ 0) return +inf off the segment/point.
  double ellipse_value(const Vec3& r_s) const;

  /// Boundary distance from the center along in-plane angle theta (measured
  /// from the a-axis towards the b-axis).
  double boundary_radius(double theta) const;
};

/// Throws std::invalid_argument unless s is a product state.
ReachableDisk reachable_disk(const TwoQubitState& s, Axis i, Axis j);

/// n samples of r_S after a uniformly random rotation of Q followed by the
/// interaction for a duration uniform on [0, 2 pi).
std::vector<Vec3> sample_reachable(const TwoQubitState& s, Axis i, Axis j, int n,
                                   std::uint64_t seed = 5489u);

/// n samples of r_S after `steps` alternating (random Q rotation, random
/// duration) pairs.
std::vector<Vec3> sample_reachable_sequences(const TwoQubitState& s, Axis i, Axis j, int n,
                                             int steps, std::uint64_t seed = 5489u);

/// For each of `directions` equally spaced probe angles: boundary radius times
/// (1 - max normalized radius of the samples within the probe's angular
/// sector). Zero means the samples reach the boundary in that direction.
std::vector<double> boundary_gaps(const ReachableDisk& disk, const std::vector<Vec3>& samples,
                                  int directions = 32);

struct EntanglementReport {
  double coupling = 0.0;
  std::vector<double> phi_grid;
  std::vector<double> entropy1;
  std::vector<double> entropy2;
  /// Largest mean subsystem linear entropy (1/2 - 2|r|^2 convention).
  double max_entropy = 0.0;
  double phi_star = 0.0;
  bool maximal = false;
};

inline constexpr double kMaximalNormTol = 1e-8;
inline constexpr double kMaximalPurityTol = 1e-8;

/// Scans one period pi/|c| of the Heisenberg evolution on an n-point grid and
/// refines the maximizing phi in closed form. Throws for n < 16.
EntanglementReport heisenberg_entanglement_scan(const TwoQubitState& s, double coupling, int n);

}  // namespace blochorbit
