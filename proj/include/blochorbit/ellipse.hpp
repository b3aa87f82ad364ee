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

#include <string>

#include "blochorbit/state.hpp"

namespace blochorbit {

enum class Degeneracy { none, circle, line, point };

std::string to_string(Degeneracy d);

/// Orthonormal in-plane frame of an orbit; normal = e1 x e2.
struct OrbitPlane {
  Vec3 e1 = Vec3::UnitX();
  Vec3 e2 = Vec3::UnitY();
  Vec3 normal = Vec3::UnitZ();
};

/// Geometry of a coherence-vector orbit.
///
/// In plane coordinates the orbit is s(w) = a cos(w) (cos psi, -sin psi)
/// + orientation * b sin(w) (sin psi, cos psi) with w = rate * phi - chi, so the
/// initial point sits at angle -chi from the principal axis a. psi is in
/// (-pi, pi] and chi in (-pi/2, pi/2]; for a circle a is anchored at the
/// initial point (chi = 0). orientation is -1 for clockwise traversal in
/// (e1, e2).
struct EllipseParams {
  double a = 0.0;
  double b = 0.0;
  double psi = 0.0;
  double chi = 0.0;
  int orientation = 1;
  double rate = 1.0;
  OrbitPlane plane;
  Vec3 center = Vec3::Zero();
  Degeneracy degeneracy = Degeneracy::none;

  /// Reconstructed coherence vector at orbit parameter phi.
  Vec3 point(double phi) const;
};

inline constexpr double kDegenerateLength = 1e-12;
inline constexpr double kCircleRelTol = 1e-10;

/// Ellipse parameters of the orbit s(w) = p cos w + q sin w in the plane.
/// plane/center/rate are left at their defaults.
EllipseParams fit_conjugate(const Eigen::Vector2d& p, const Eigen::Vector2d& q);

/// Orbit of one subsystem's coherence vector under sigma_i (x) sigma_j.
/// Subsystem 1 moves in the (k, l) plane perpendicular to i, subsystem 2 in
/// the (m, n) plane perpendicular to j.
EllipseParams fit_one_dim(const TwoQubitState& s, Subsystem which, Axis i, Axis j);

struct ChiEstimate {
  double chi = 0.0;
  double tan2chi = 0.0;
  bool indeterminate = false;
};

/// chi from tan(2 chi) = 2 [r_k T_lj - r_l T_kj] / [-r_l^2 + T_kj^2 - r_k^2 + T_lj^2]
/// (subsystem 1; subsystem 2 uses r2 and T_in, T_im). The quarter-turn branch
/// is resolved by evolving the state to each candidate and keeping the
/// major-axis point with |chi| <= pi/2. Circles and points are reported
/// indeterminate.
ChiEstimate chi_closed_form(const TwoQubitState& s, Subsystem which, Axis i, Axis j);

/// Heisenberg orbit r(phi) = R + S cos(2 c phi) + V sin(2 c phi) of subsystem
/// 1 (subsystem 2 has S, V negated), centred at R with plane spanned by S, V.
EllipseParams heisenberg_ellipse(const TwoQubitState& s, double coupling,
                                 Subsystem which = Subsystem::first);

/// Semi-minor axis for an initial product state, 2 |r2_j| |(r1_k, r1_l)| for
/// subsystem 1 and 2 |r1_i| |(r2_m, r2_n)| for subsystem 2. Throws
/// std::invalid_argument if s is not a product state.
double semi_minor_product(const TwoQubitState& s, Subsystem which, Axis i, Axis j);

}  // namespace blochorbit
