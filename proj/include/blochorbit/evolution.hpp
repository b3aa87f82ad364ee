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

#include <variant>
#include <vector>

#include "blochorbit/state.hpp"

namespace blochorbit {

/// Rotation exp(-i (angle/2) axis . sigma) on one qubit.
struct LocalRotation {
  Subsystem target = Subsystem::first;
  Vec3 axis = Vec3::UnitZ();
  double angle = 0.0;
};

/// exp[-i (phi/2) sigma_i (x) sigma_j], i.e. H = sigma_i (x) sigma_j / 2 for duration phi.
struct OneDimInteraction {
  Axis i = Axis::z;
  Axis j = Axis::z;
  double phi = 0.0;
};

/// exp[-i (c phi/2)(XX + YY + ZZ)].
struct HeisenbergExchange {
  double coupling = 1.0;
  double phi = 0.0;
};

/// exp[(i/2)(c1 XX + c2 YY + c3 ZZ)].
struct CartanInteraction {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

using InteractionSpec =
    std::variant<LocalRotation, OneDimInteraction, HeisenbergExchange, CartanInteraction>;

/// Throws std::invalid_argument for non-finite parameters or a non-unit local axis.
void check_spec(const InteractionSpec& spec);

/// The member of the spec's one-parameter family at orbit parameter phi.
///
/// OneDim and Heisenberg take phi as their duration. Local scales the
/// rotation angle and Cartan scales (c1, c2, c3), so phi = 1 reproduces the
/// spec as given.
InteractionSpec at_parameter(const InteractionSpec& spec, double phi);

/// Rotates the target's coherence vector by R(axis, angle) and the matching
/// index of T (rows for subsystem 1, columns for subsystem 2).
TwoQubitState apply_local(const TwoQubitState& s, Subsystem target, const Vec3& axis,
                          double angle);

/// Conjugation by exp[-i (phi/2) sigma_i (x) sigma_j].
///
/// With (i, k, l) and (j, m, n) cyclic:
///   r1_k <- r1_k cos - T_lj sin     T_kj <- T_kj cos - r1_l sin
///   r1_l <- r1_l cos + T_kj sin     T_lj <- T_lj cos + r1_k sin
///   r2_m <- r2_m cos - T_in sin     T_im <- T_im cos - r2_n sin
///   r2_n <- r2_n cos + T_im sin     T_in <- T_in cos + r2_m sin
/// r1_i, r2_j, T_ij and the four T_kl with k != i, l != j are unchanged.
TwoQubitState apply_one_dim(const TwoQubitState& s, Axis i, Axis j, double phi);

/// Conjugation by exp[-i (c phi/2)(XX + YY + ZZ)].
///
/// With u = 2 c phi, R = (r1 + r2)/2, S = (r1 - r2)/2 and
/// V_a = (T_cb - T_bc)/2 for cyclic (a, b, c):
///   r1(u) = R + S cos u + V sin u,   r2(u) = R - S cos u - V sin u,
///   T_ab(u) = (T_ab + T_ba)/2 + (T_ab - T_ba)/2 cos u + eps_abd S_d sin u.
TwoQubitState apply_heisenberg(const TwoQubitState& s, double coupling, double phi);

/// Conjugation by exp[(i/2)(c1 XX + c2 YY + c3 ZZ)], applied as the commuting
/// product of one-dimensional steps (x,x,-c1), (y,y,-c2), (z,z,-c3).
TwoQubitState apply_cartan(const TwoQubitState& s, double c1, double c2, double c3);

TwoQubitState apply_interaction(const TwoQubitState& s, const InteractionSpec& spec);

/// apply_interaction(s, at_parameter(spec, phi)).
TwoQubitState evolve(const TwoQubitState& s, const InteractionSpec& spec, double phi);

struct OrbitSample {
  double phi;
  TwoQubitState state;
};

struct OrbitTrace {
  InteractionSpec spec;
  TwoQubitState initial;
  std::vector<OrbitSample> samples;
};

/// n >= 2 samples on the uniform grid over [0, phi_max]. Each sample is
/// evolved from the initial state directly. phi_max = 0 repeats the initial
/// state (the grid is then not strictly increasing).
OrbitTrace trace_orbit(const TwoQubitState& s, const InteractionSpec& spec, double phi_max,
                       int n);

}  // namespace blochorbit
