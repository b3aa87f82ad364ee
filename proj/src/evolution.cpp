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

#include "blochorbit/evolution.hpp"

#include <cmath>
#include <stdexcept>

namespace blochorbit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kAxisTol = 1e-12;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

Mat3 rotation(const Vec3& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis).toRotationMatrix();
}

// Levi-Civita symbol for distinct a, b and the remaining index.
double levi_civita(int a, int b) { return (b - a + 3) % 3 == 1 ? 1.0 : -1.0; }

}  // namespace

void check_spec(const InteractionSpec& spec) {
  std::visit(overloaded{
                 [](const LocalRotation& l) {
                   if (!l.axis.allFinite()) throw std::invalid_argument("local axis must be finite");
                   if (std::abs(l.axis.norm() - 1.0) > kAxisTol)
                     throw std::invalid_argument("local rotation axis must be a unit vector");
                   require_finite(l.angle, "local angle");
                 },
                 [](const OneDimInteraction& o) { require_finite(o.phi, "duration"); },
                 [](const HeisenbergExchange& h) {
                   require_finite(h.coupling, "coupling");
                   require_finite(h.phi, "duration");
                 },
                 [](const CartanInteraction& c) {
                   require_finite(c.c1, "c1");
                   require_finite(c.c2, "c2");
                   require_finite(c.c3, "c3");
                 },
             },
             spec);
}

InteractionSpec at_parameter(const InteractionSpec& spec, double phi) {
  return std::visit(overloaded{
                        [phi](LocalRotation l) -> InteractionSpec {
                          l.angle *= phi;
                          return l;
                        },
                        [phi](OneDimInteraction o) -> InteractionSpec {
                          o.phi = phi;
                          return o;
                        },
                        [phi](HeisenbergExchange h) -> InteractionSpec {
                          h.phi = phi;
                          return h;
                        },
                        [phi](CartanInteraction c) -> InteractionSpec {
                          return CartanInteraction{c.c1 * phi, c.c2 * phi, c.c3 * phi};
                        },
                    },
                    spec);
}

TwoQubitState apply_local(const TwoQubitState& s, Subsystem target, const Vec3& axis,
                          double angle) {
  if (!axis.allFinite() || std::abs(axis.norm() - 1.0) > kAxisTol)
    throw std::invalid_argument("local rotation axis must be a unit vector");
  const Mat3 rot = rotation(axis, angle);
  TwoQubitState out = s;
  if (target == Subsystem::first) {
    out.r1 = rot * s.r1;
    out.T = rot * s.T;
  } else {
    out.r2 = rot * s.r2;
    out.T = s.T * rot.transpose();
  }
  return out;
}

TwoQubitState apply_one_dim(const TwoQubitState& s, Axis i_axis, Axis j_axis, double phi) {
  const double c = std::cos(phi), sn = std::sin(phi);
  const int i = index(i_axis), k = index(next(i_axis)), l = index(next(next(i_axis)));
  const int j = index(j_axis), m = index(next(j_axis)), n = index(next(next(j_axis)));

  TwoQubitState out = s;
  out.r1[k] = s.r1[k] * c - s.T(l, j) * sn;
  out.r1[l] = s.r1[l] * c + s.T(k, j) * sn;
  out.T(k, j) = s.T(k, j) * c - s.r1[l] * sn;
  out.T(l, j) = s.T(l, j) * c + s.r1[k] * sn;

  out.r2[m] = s.r2[m] * c - s.T(i, n) * sn;
  out.r2[n] = s.r2[n] * c + s.T(i, m) * sn;
  out.T(i, m) = s.T(i, m) * c - s.r2[n] * sn;
  out.T(i, n) = s.T(i, n) * c + s.r2[m] * sn;
  return out;
}

TwoQubitState apply_heisenberg(const TwoQubitState& s, double coupling, double phi) {
  const double u = 2.0 * coupling * phi;
  const double c = std::cos(u), sn = std::sin(u);
  const Vec3 center = (s.r1 + s.r2) / 2.0;
  const Vec3 diff = (s.r1 - s.r2) / 2.0;
  Vec3 twist;
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3, d = (a + 2) % 3;
    twist[a] = (s.T(d, b) - s.T(b, d)) / 2.0;
  }

  TwoQubitState out;
  out.r1 = center + diff * c + twist * sn;
  out.r2 = center - diff * c - twist * sn;
  for (int a = 0; a < 3; ++a) {
    out.T(a, a) = s.T(a, a);
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      const int d = 3 - a - b;
      const double sym = (s.T(a, b) + s.T(b, a)) / 2.0;
      const double anti = (s.T(a, b) - s.T(b, a)) / 2.0;
      out.T(a, b) = sym + anti * c + levi_civita(a, b) * diff[d] * sn;
    }
  }
  return out;
}

TwoQubitState apply_cartan(const TwoQubitState& s, double c1, double c2, double c3) {
  TwoQubitState out = apply_one_dim(s, Axis::x, Axis::x, -c1);
  out = apply_one_dim(out, Axis::y, Axis::y, -c2);
  return apply_one_dim(out, Axis::z, Axis::z, -c3);
}

TwoQubitState apply_interaction(const TwoQubitState& s, const InteractionSpec& spec) {
  check_spec(spec);
  return std::visit(
      overloaded{
          [&](const LocalRotation& l) { return apply_local(s, l.target, l.axis, l.angle); },
          [&](const OneDimInteraction& o) { return apply_one_dim(s, o.i, o.j, o.phi); },
          [&](const HeisenbergExchange& h) { return apply_heisenberg(s, h.coupling, h.phi); },
          [&](const CartanInteraction& c) { return apply_cartan(s, c.c1, c.c2, c.c3); },
      },
      spec);
}

TwoQubitState evolve(const TwoQubitState& s, const InteractionSpec& spec, double phi) {
  return apply_interaction(s, at_parameter(spec, phi));
}

OrbitTrace trace_orbit(const TwoQubitState& s, const InteractionSpec& spec, double phi_max,
                       int n) {
  if (n < 2) throw std::invalid_argument("orbit needs at least 2 samples");
  if (!std::isfinite(phi_max) || phi_max < 0.0)
    throw std::invalid_argument("phi_max must be finite and non-negative");
  check_spec(spec);
  OrbitTrace trace{spec, s, {}};
  trace.samples.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    const double phi = t == n - 1 ? phi_max : phi_max * t / (n - 1);
    trace.samples.push_back({phi, evolve(s, spec, phi)});
  }
  return trace;
}

}  // namespace blochorbit
