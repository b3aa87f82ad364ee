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

#include "blochorbit/pauli.hpp"

#include <cmath>
#include <stdexcept>

namespace blochorbit {

char axis_name(Axis a) { return "xyz"[index(a)]; }

Axis parse_axis(std::string_view name) {
  if (name == "x" || name == "X" || name == "1") return Axis::x;
  if (name == "y" || name == "Y" || name == "2") return Axis::y;
  if (name == "z" || name == "Z" || name == "3") return Axis::z;
  throw std::invalid_argument("unknown axis '" + std::string(name) + "'");
}

Matrix2c pauli(Axis a) {
  Matrix2c m;
  switch (a) {
    case Axis::x:
      m << 0, 1, 1, 0;
      break;
    case Axis::y:
      m << 0, -kI, kI, 0;
      break;
    case Axis::z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
  return out;
}

namespace {

std::array<BasisElement, 16> make_basis() {
  const Matrix2c id = Matrix2c::Identity();
  std::array<BasisElement, 16> out;
  out[0] = {0, Matrix4c::Identity() / 2.0, "I(x)I"};
  for (int a = 0; a < 3; ++a) {
    const Axis ax = axis_from_index(a);
    const std::string s = std::string("s") + axis_name(ax);
    out[1 + a] = {1 + a, kron(pauli(ax), id) / 2.0, s + "(x)1"};
    out[4 + a] = {4 + a, kron(id, pauli(ax)) / 2.0, "1(x)" + s};
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const Axis ax = axis_from_index(a), bx = axis_from_index(b);
      const int k = correlation_index(ax, bx);
      out[k] = {k, kron(pauli(ax), pauli(bx)) / 2.0,
                std::string("s") + axis_name(ax) + "(x)s" + axis_name(bx)};
    }
  }
  return out;
}

}  // namespace

const std::array<BasisElement, 16>& basis() {
  static const std::array<BasisElement, 16> kBasis = make_basis();
  return kBasis;
}

Matrix4c exp_one_dim(Axis i, Axis j, double phi) {
  return std::cos(phi / 2) * Matrix4c::Identity() -
         kI * std::sin(phi / 2) * kron(pauli(i), pauli(j));
}

Matrix4c exp_heisenberg(double coupling, double phi) {
  const double h = coupling * phi / 2;
  const double c = std::cos(h), s = std::sin(h);
  Matrix4c exchange = Matrix4c::Zero();
  for (Axis a : {Axis::x, Axis::y, Axis::z}) exchange += kron(pauli(a), pauli(a));
  const cplx identity_coeff{c * c * c, -s * s * s};
  const cplx exchange_coeff = -0.5 * kI * std::exp(kI * h) * std::sin(coupling * phi);
  return identity_coeff * Matrix4c::Identity() + exchange_coeff * exchange;
}

double phase_overlap(const Matrix4c& u, const Matrix4c& v) {
  return std::abs((u.adjoint() * v).trace()) / 4.0;
}

double phase_distance(const Matrix4c& u, const Matrix4c& v) {
  const cplx overlap = (u.adjoint() * v).trace();
  const cplx phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx{1.0};
  return (u * phase - v).cwiseAbs().maxCoeff();
}

bool is_unitary(const Matrix4c& u, double tol) {
  if (!u.allFinite()) return false;
  return (u.adjoint() * u - Matrix4c::Identity()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace blochorbit
