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

#include <array>
#include <complex>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace blochorbit {

using cplx = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

inline constexpr cplx kI{0.0, 1.0};

enum class Axis : int { x = 0, y = 1, z = 2 };

constexpr int index(Axis a) { return static_cast<int>(a); }
constexpr Axis axis_from_index(int i) { return static_cast<Axis>(((i % 3) + 3) % 3); }
/// Next axis in the cyclic order x -> y -> z -> x.
constexpr Axis next(Axis a) { return axis_from_index(index(a) + 1); }

char axis_name(Axis a);
/// Accepts "x", "y", "z" (also "1", "2", "3"). Throws std::invalid_argument.
Axis parse_axis(std::string_view name);

Matrix2c pauli(Axis a);

/// Tensor product a (x) b with `a` acting on the left factor (subsystem 1).
Matrix4c kron(const Matrix2c& a, const Matrix2c& b);

struct BasisElement {
  int index;
  Matrix4c matrix;
  std::string label;
};

/// Orthonormal generator basis X_0..X_15 of u(4) under Tr(X_j X_k).
///
/// Layout: X_0 = I/2; X_1..X_3 = sigma_a (x) I / 2; X_4..X_6 = I (x) sigma_a / 2;
/// X_7..X_15 = sigma_a (x) sigma_b / 2 with index 7 + 3a + b (row-major in
/// (subsystem-1 axis, subsystem-2 axis)).
const std::array<BasisElement, 16>& basis();

/// Linear index of the correlation element sigma_a (x) sigma_b in basis().
constexpr int correlation_index(Axis a, Axis b) { return 7 + 3 * index(a) + index(b); }

/// exp[-i (phi/2) sigma_i (x) sigma_j], closed form cos(phi/2) I - i sin(phi/2) sigma_i (x) sigma_j.
Matrix4c exp_one_dim(Axis i, Axis j, double phi);

/// exp[-i (c phi/2)(XX + YY + ZZ)] in closed form.
Matrix4c exp_heisenberg(double coupling, double phi);

/// |Tr(U^dagger V)| / 4; equals 1 iff U and V agree up to a global phase (for unitaries).
double phase_overlap(const Matrix4c& u, const Matrix4c& v);

/// Max entrywise distance between U and V after removing the relative global phase.
double phase_distance(const Matrix4c& u, const Matrix4c& v);

bool is_unitary(const Matrix4c& u, double tol = 1e-10);

}  // namespace blochorbit
