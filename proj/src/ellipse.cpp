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

#include "blochorbit/ellipse.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "blochorbit/evolution.hpp"

namespace blochorbit {

namespace {

using Vec2 = Eigen::Vector2d;
constexpr double kPi = std::numbers::pi;

double wrap_angle(double x) {
  x = std::remainder(x, 2 * kPi);
  return x <= -kPi ? x + 2 * kPi : x;
}

struct PlaneCoords {
  Vec2 p;
  Vec2 q;
  OrbitPlane plane;
  Vec3 center;
};

// Initial point p and quarter-period point q of the one-dimensional orbit.
PlaneCoords one_dim_coords(const TwoQubitState& s, Subsystem which, Axis i, Axis j) {
  PlaneCoords pc;
  if (which == Subsystem::first) {
    const int ii = index(i), k = index(next(i)), l = index(next(next(i))), jj = index(j);
    pc.p = {s.r1[k], s.r1[l]};
    pc.q = {-s.T(l, jj), s.T(k, jj)};
    pc.plane = {Vec3::Unit(k), Vec3::Unit(l), Vec3::Unit(ii)};
    pc.center = s.r1[ii] * Vec3::Unit(ii);
  } else {
    const int jj = index(j), m = index(next(j)), n = index(next(next(j))), ii = index(i);
    pc.p = {s.r2[m], s.r2[n]};
    pc.q = {-s.T(ii, n), s.T(ii, m)};
    pc.plane = {Vec3::Unit(m), Vec3::Unit(n), Vec3::Unit(jj)};
    pc.center = s.r2[jj] * Vec3::Unit(jj);
  }
  return pc;
}

double cross2(const Vec2& u, const Vec2& v) { return u.x() * v.y() - u.y() * v.x(); }

}  // namespace

std::string to_string(Degeneracy d) {
  switch (d) {
    case Degeneracy::none:
      return "none";
    case Degeneracy::circle:
      return "circle";
    case Degeneracy::line:
      return "line";
    case Degeneracy::point:
      return "point";
  }
  return "none";
}

Vec3 EllipseParams::point(double phi) const {
  const double w = rate * phi - chi;
  const double cp = std::cos(psi), sp = std::sin(psi);
  const double x = a * std::cos(w) * cp + orientation * b * std::sin(w) * sp;
  const double y = -a * std::cos(w) * sp + orientation * b * std::sin(w) * cp;
  return center + x * plane.e1 + y * plane.e2;
}

EllipseParams fit_conjugate(const Vec2& p, const Vec2& q) {
  EllipseParams e;
  if (std::max(p.norm(), q.norm()) < kDegenerateLength) {
    e.degeneracy = Degeneracy::point;
    return e;
  }

  const double num = -2.0 * p.dot(q);
  const double den = q.squaredNorm() - p.squaredNorm();
  const double base = den != 0.0 ? 0.5 * std::atan(num / den) : (num >= 0 ? kPi / 4 : -kPi / 4);

  // The two quarter-turn branches swap the roles of a and b; keep a >= b.
  double chi = base;
  Vec2 major = p * std::cos(chi) + q * std::sin(chi);
  Vec2 minor = q * std::cos(chi) - p * std::sin(chi);
  if (minor.norm() > major.norm()) {
    chi = base + kPi / 2;
    major = p * std::cos(chi) + q * std::sin(chi);
    minor = q * std::cos(chi) - p * std::sin(chi);
  }

  // Of the two antipodal major-axis points keep the one with |chi| <= pi/2.
  if (chi > kPi / 2) {
    chi -= kPi;
    major = -major;
    minor = -minor;
  }

  e.a = major.norm();
  e.psi = wrap_angle(std::atan2(-major.y(), major.x()));
  e.chi = chi;
  const double b_signed = minor.dot(Vec2{std::sin(e.psi), std::cos(e.psi)});
  e.b = std::abs(b_signed);
  e.orientation = b_signed < 0 ? -1 : 1;

  if (e.b < kDegenerateLength) {
    e.b = 0.0;
    e.orientation = 1;
    e.degeneracy = Degeneracy::line;
  } else if (std::abs(e.a - e.b) < kCircleRelTol * std::max(e.a, 1.0)) {
    // Every point of a circle is on a principal axis; anchor a at p.
    e.degeneracy = Degeneracy::circle;
    e.orientation = cross2(p, q) < 0 ? -1 : 1;
    e.psi = wrap_angle(std::atan2(-p.y(), p.x()));
    e.chi = 0.0;
  }
  return e;
}

EllipseParams fit_one_dim(const TwoQubitState& s, Subsystem which, Axis i, Axis j) {
  const PlaneCoords pc = one_dim_coords(s, which, i, j);
  EllipseParams e = fit_conjugate(pc.p, pc.q);
  e.plane = pc.plane;
  e.center = pc.center;
  e.rate = 1.0;
  return e;
}

ChiEstimate chi_closed_form(const TwoQubitState& s, Subsystem which, Axis i, Axis j) {
  const PlaneCoords pc = one_dim_coords(s, which, i, j);
  // In terms of the subsystem-1 labels: r_k = p.x, r_l = p.y, T_lj = -q.x, T_kj = q.y.
  const double rk = pc.p.x(), rl = pc.p.y(), tlj = -pc.q.x(), tkj = pc.q.y();
  const double num = 2.0 * (rk * tlj - rl * tkj);
  const double den = -rl * rl + tkj * tkj - rk * rk + tlj * tlj;
  const double scale = pc.p.squaredNorm() + pc.q.squaredNorm();

  ChiEstimate est;
  est.tan2chi = num / den;
  if (scale < kDegenerateLength * kDegenerateLength || std::hypot(num, den) <= kCircleRelTol * scale) {
    est.indeterminate = true;
    return est;
  }
  const double base = den != 0.0 ? 0.5 * std::atan(num / den) : (num >= 0 ? kPi / 4 : -kPi / 4);

  struct Candidate {
    double chi;
    Vec2 at;
  };
  std::array<Candidate, 4> cands;
  for (int m = 0; m < 4; ++m) {
    const double chi = wrap_angle(base + m * kPi / 2);
    const TwoQubitState st = apply_one_dim(s, i, j, chi);
    const Vec3& r = st.r(which);
    cands[m] = {chi, Vec2{r.dot(pc.plane.e1), r.dot(pc.plane.e2)}};
  }
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& x, const Candidate& y) { return x.at.norm() > y.at.norm(); });
  // The two longest candidates are antipodal points on the major axis, half
  // a period apart; report the one with |chi| <= pi/2.
  const Candidate& u = cands[0];
  const Candidate& v = cands[1];
  const bool pick_u = std::abs(u.chi) < std::abs(v.chi) ||
                      (std::abs(u.chi) == std::abs(v.chi) && u.chi > v.chi);
  est.chi = pick_u ? u.chi : v.chi;
  return est;
}

EllipseParams heisenberg_ellipse(const TwoQubitState& s, double coupling, Subsystem which) {
  if (!std::isfinite(coupling)) throw std::invalid_argument("coupling must be finite");
  const Vec3 center = (s.r1 + s.r2) / 2.0;
  Vec3 diff = (s.r1 - s.r2) / 2.0;
  Vec3 twist;
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3, d = (a + 2) % 3;
    twist[a] = (s.T(d, b) - s.T(b, d)) / 2.0;
  }
  if (which == Subsystem::second) {
    diff = -diff;
    twist = -twist;
  }

  EllipseParams e;
  e.center = center;
  e.rate = 2.0 * coupling;
  if (std::max(diff.norm(), twist.norm()) < kDegenerateLength || coupling == 0.0) {
    e.degeneracy = Degeneracy::point;
    e.center = s.r(which);
    return e;
  }

  OrbitPlane plane;
  const bool diff_first = diff.norm() >= kDegenerateLength;
  plane.e1 = (diff_first ? diff : twist).normalized();
  const Vec3 rest = diff_first ? twist : diff;
  const Vec3 w = rest - rest.dot(plane.e1) * plane.e1;
  if (w.norm() >= kDegenerateLength) {
    plane.e2 = w.normalized();
  } else {
    // Line orbit: complete the frame with any perpendicular direction.
    const Vec3 trial = std::abs(plane.e1.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    plane.e2 = (trial - trial.dot(plane.e1) * plane.e1).normalized();
  }
  plane.normal = plane.e1.cross(plane.e2);

  e = fit_conjugate(Vec2{diff.dot(plane.e1), diff.dot(plane.e2)},
                    Vec2{twist.dot(plane.e1), twist.dot(plane.e2)});
  e.plane = plane;
  e.center = center;
  e.rate = 2.0 * coupling;
  return e;
}

double semi_minor_product(const TwoQubitState& s, Subsystem which, Axis i, Axis j) {
  if (!validate(s).product) throw std::invalid_argument("semi-minor closed form needs a product state");
  if (which == Subsystem::first) {
    const int k = index(next(i)), l = index(next(next(i)));
    return 2.0 * std::abs(s.r2[index(j)]) * std::hypot(s.r1[k], s.r1[l]);
  }
  const int m = index(next(j)), n = index(next(next(j)));
  return 2.0 * std::abs(s.r1[index(i)]) * std::hypot(s.r2[m], s.r2[n]);
}

}  // namespace blochorbit
