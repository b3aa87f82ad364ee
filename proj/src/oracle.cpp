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

#include "blochorbit/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace blochorbit::oracle {

DensityMatrix4 evolve_matrix(const DensityMatrix4& rho, const Matrix4c& u) {
  if (!is_unitary(u, 1e-10)) throw std::invalid_argument("evolution operator is not unitary");
  Matrix4c out = u * rho.matrix() * u.adjoint();
  out = (out + out.adjoint()).eval() / 2.0;
  return DensityMatrix4(out);
}

Matrix2c partial_trace(const Matrix4c& rho, Subsystem keep) {
  Matrix2c out = Matrix2c::Zero();
  // rho index = 2 * (qubit-1 bit) + (qubit-2 bit).
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int t = 0; t < 2; ++t) {
        if (keep == Subsystem::first)
          out(a, b) += rho(2 * a + t, 2 * b + t);
        else
          out(a, b) += rho(2 * t + a, 2 * t + b);
      }
    }
  }
  return out;
}

Matrix2c partial_trace(const DensityMatrix4& rho, Subsystem keep) {
  return partial_trace(rho.matrix(), keep);
}

Vec3 coherence_vector(const Matrix2c& rho) {
  Vec3 v;
  for (Axis a : {Axis::x, Axis::y, Axis::z}) v[index(a)] = (rho * pauli(a)).trace().real() / 2.0;
  return v;
}

Matrix2c spin_rotation(const Vec3& axis, double angle) {
  Matrix2c gen = Matrix2c::Zero();
  for (Axis a : {Axis::x, Axis::y, Axis::z}) gen += axis[index(a)] * pauli(a);
  return std::cos(angle / 2) * Matrix2c::Identity() - kI * std::sin(angle / 2) * gen;
}

Matrix4c unitary_for(const InteractionSpec& spec) {
  check_spec(spec);
  if (const auto* l = std::get_if<LocalRotation>(&spec)) {
    const Matrix2c rot = spin_rotation(l->axis, l->angle);
    const Matrix2c id = Matrix2c::Identity();
    return l->target == Subsystem::first ? kron(rot, id) : kron(id, rot);
  }
  if (const auto* o = std::get_if<OneDimInteraction>(&spec)) return exp_one_dim(o->i, o->j, o->phi);
  if (const auto* h = std::get_if<HeisenbergExchange>(&spec))
    return exp_heisenberg(h->coupling, h->phi);
  const auto& c = std::get<CartanInteraction>(spec);
  return exp_one_dim(Axis::x, Axis::x, -c.c1) * exp_one_dim(Axis::y, Axis::y, -c.c2) *
         exp_one_dim(Axis::z, Axis::z, -c.c3);
}

TwoQubitState evolve_state(const TwoQubitState& s, const InteractionSpec& spec) {
  const DensityMatrix4 rho(reconstruct(s));
  return from_density(evolve_matrix(rho, unitary_for(spec)));
}

}  // namespace blochorbit::oracle
