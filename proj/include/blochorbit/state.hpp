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
#include <vector>

#include <Eigen/Dense>

#include "blochorbit/pauli.hpp"

namespace blochorbit {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

enum class Subsystem : int { first = 1, second = 2 };

Subsystem parse_subsystem(int which);

/// Two-qubit state in the coherence representation.
///
/// With rho = sum_j Tr(rho X_j) X_j over basis():
///   r1[a]   = Tr(rho X_{1+a}) = <sigma_a (x) I> / 2
///   r2[a]   = Tr(rho X_{4+a}) = <I (x) sigma_a> / 2
///   T(a, b) = Tr(rho X_{7+3a+b}) = <sigma_a (x) sigma_b> / 2
/// so the row index of T is the subsystem-1 axis. Coherence vectors of pure
/// qubits have norm 1/2 (the Bloch vector is 2 r).
struct TwoQubitState {
  Vec3 r1 = Vec3::Zero();
  Vec3 r2 = Vec3::Zero();
  Mat3 T = Mat3::Zero();

  const Vec3& r(Subsystem which) const { return which == Subsystem::first ? r1 : r2; }

  /// The 16 expansion coefficients rho_0..rho_15 (rho_0 = 1/2).
  std::array<double, 16> components() const;
  static TwoQubitState from_components(const std::array<double, 16>& rho);

  double max_abs_diff(const TwoQubitState& other) const;
};

/// Hermitian, unit-trace, positive semidefinite 4x4 matrix.
class DensityMatrix4 {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kEigenTol = 1e-10;

  /// Throws std::invalid_argument if any invariant fails.
  explicit DensityMatrix4(const Matrix4c& m);

  const Matrix4c& matrix() const { return m_; }

  static DensityMatrix4 maximally_mixed();
  static DensityMatrix4 from_pure(const Eigen::Vector4cd& psi);

 private:
  Matrix4c m_;
};

double min_eigenvalue(const Matrix4c& hermitian);

/// Expansion coefficients of rho. Requires Hermitian to 1e-12 and unit trace
/// to 1e-12 (std::invalid_argument otherwise); positivity is not required.
TwoQubitState from_density(const Matrix4c& rho);
TwoQubitState from_density(const DensityMatrix4& rho);

/// sum_j rho_j X_j with no validity check.
Matrix4c reconstruct(const TwoQubitState& s);

/// Checked reconstruction; throws std::domain_error if the result has an
/// eigenvalue below -1e-10.
DensityMatrix4 to_density(const TwoQubitState& s);

/// rho_1 (x) rho_2 for single-qubit coherence vectors v1, v2: T = 2 v1 v2^T.
TwoQubitState product_state(const Vec3& v1, const Vec3& v2);

/// Tr(rho_sub^2) = 1/2 + 2 |r|^2.
double subsystem_purity(const TwoQubitState& s, Subsystem which);
/// 1 - Tr(rho_sub^2) = 1/2 - 2 |r|^2.
double linear_entropy(const TwoQubitState& s, Subsystem which);
/// Tr(rho^2) = 1/4 + |r1|^2 + |r2|^2 + |T|_F^2.
double global_purity(const TwoQubitState& s);

/// max |T(a,b) - 2 r1[a] r2[b]|.
double product_residual(const TwoQubitState& s);

struct ValidationReport {
  double hermitian_error = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;
  double r1_norm = 0.0;
  double r2_norm = 0.0;
  double product_residual = 0.0;
  bool finite = true;
  bool positive = true;
  bool norms_ok = true;
  bool product = false;
  std::vector<std::string> violations;

  bool valid() const { return finite && positive && norms_ok; }
};

struct ValidationTolerances {
  double norm = 1e-10;
  double eigen = 1e-10;
  double product = 1e-10;
};

ValidationReport validate(const TwoQubitState& s, const ValidationTolerances& tol = {});

}  // namespace blochorbit
