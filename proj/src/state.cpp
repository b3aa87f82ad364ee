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

#include "blochorbit/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace blochorbit {

Subsystem parse_subsystem(int which) {
  if (which == 1) return Subsystem::first;
  if (which == 2) return Subsystem::second;
  throw std::invalid_argument("subsystem must be 1 or 2, got " + std::to_string(which));
}

std::array<double, 16> TwoQubitState::components() const {
  std::array<double, 16> rho{};
  rho[0] = 0.5;
  for (int a = 0; a < 3; ++a) {
    rho[1 + a] = r1[a];
    rho[4 + a] = r2[a];
    for (int b = 0; b < 3; ++b) rho[7 + 3 * a + b] = T(a, b);
  }
  return rho;
}

TwoQubitState TwoQubitState::from_components(const std::array<double, 16>& rho) {
  TwoQubitState s;
  for (int a = 0; a < 3; ++a) {
    s.r1[a] = rho[1 + a];
    s.r2[a] = rho[4 + a];
    for (int b = 0; b < 3; ++b) s.T(a, b) = rho[7 + 3 * a + b];
  }
  return s;
}

double TwoQubitState::max_abs_diff(const TwoQubitState& other) const {
  return std::max({(r1 - other.r1).cwiseAbs().maxCoeff(), (r2 - other.r2).cwiseAbs().maxCoeff(),
                   (T - other.T).cwiseAbs().maxCoeff()});
}

namespace {

double hermitian_error(const Matrix4c& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

void require_hermitian_unit_trace(const Matrix4c& m) {
  if (!m.allFinite()) throw std::invalid_argument("density matrix has non-finite entries");
  if (hermitian_error(m) > DensityMatrix4::kHermitianTol)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(m.trace() - cplx{1.0}) > DensityMatrix4::kTraceTol)
    throw std::invalid_argument("density matrix does not have unit trace");
}

}  // namespace

DensityMatrix4::DensityMatrix4(const Matrix4c& m) : m_(m) {
  require_hermitian_unit_trace(m);
  if (min_eigenvalue(m) < -kEigenTol)
    throw std::invalid_argument("density matrix is not positive semidefinite");
}

DensityMatrix4 DensityMatrix4::maximally_mixed() { return DensityMatrix4(Matrix4c::Identity() / 4.0); }

DensityMatrix4 DensityMatrix4::from_pure(const Eigen::Vector4cd& psi) {
  const double n = psi.norm();
  if (!(n > 0.0)) throw std::invalid_argument("pure state vector must be nonzero");
  const Eigen::Vector4cd u = psi / n;
  Matrix4c m = u * u.adjoint();
  // Exact Hermiticity; rounding in the outer product can leave 1e-17 skew parts.
  m = (m + m.adjoint()).eval() / 2.0;
  return DensityMatrix4(m);
}

double min_eigenvalue(const Matrix4c& hermitian) {
  const Matrix4c h = (hermitian + hermitian.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

TwoQubitState from_density(const Matrix4c& rho) {
  require_hermitian_unit_trace(rho);
  std::array<double, 16> c{};
  const auto& xs = basis();
  for (int j = 0; j < 16; ++j) c[j] = (rho * xs[j].matrix).trace().real();
  return TwoQubitState::from_components(c);
}

TwoQubitState from_density(const DensityMatrix4& rho) { return from_density(rho.matrix()); }

Matrix4c reconstruct(const TwoQubitState& s) {
  const auto c = s.components();
  const auto& xs = basis();
  Matrix4c m = Matrix4c::Zero();
  for (int j = 0; j < 16; ++j) m += c[j] * xs[j].matrix;
  return m;
}

DensityMatrix4 to_density(const TwoQubitState& s) {
  const Matrix4c m = reconstruct(s);
  if (!m.allFinite()) throw std::domain_error("state has non-finite components");
  const double lo = min_eigenvalue(m);
  if (lo < -DensityMatrix4::kEigenTol) {
    std::ostringstream msg;
    msg << "reconstructed density matrix is not positive (min eigenvalue " << lo << ")";
    throw std::domain_error(msg.str());
  }
  return DensityMatrix4(m);
}

TwoQubitState product_state(const Vec3& v1, const Vec3& v2) {
  constexpr double kBall = 0.5 + 1e-12;
  if (!v1.allFinite() || !v2.allFinite() || v1.norm() > kBall || v2.norm() > kBall)
    throw std::invalid_argument("single-qubit coherence vectors must lie in the ball of radius 1/2");
  TwoQubitState s;
  s.r1 = v1;
  s.r2 = v2;
  s.T = 2.0 * v1 * v2.transpose();
  return s;
}

double subsystem_purity(const TwoQubitState& s, Subsystem which) {
  return 0.5 + 2.0 * s.r(which).squaredNorm();
}

double linear_entropy(const TwoQubitState& s, Subsystem which) {
  return 1.0 - subsystem_purity(s, which);
}

double global_purity(const TwoQubitState& s) {
  return 0.25 + s.r1.squaredNorm() + s.r2.squaredNorm() + s.T.squaredNorm();
}

double product_residual(const TwoQubitState& s) {
  return (s.T - 2.0 * s.r1 * s.r2.transpose()).cwiseAbs().maxCoeff();
}

ValidationReport validate(const TwoQubitState& s, const ValidationTolerances& tol) {
  ValidationReport rep;
  rep.finite = s.r1.allFinite() && s.r2.allFinite() && s.T.allFinite();
  if (!rep.finite) {
    rep.positive = false;
    rep.norms_ok = false;
    rep.violations.emplace_back("non-finite components");
    return rep;
  }
  const Matrix4c m = reconstruct(s);
  rep.hermitian_error = hermitian_error(m);
  rep.trace_error = std::abs(m.trace() - cplx{1.0});
  rep.min_eigenvalue = min_eigenvalue(m);
  rep.r1_norm = s.r1.norm();
  rep.r2_norm = s.r2.norm();
  rep.product_residual = product_residual(s);

  rep.positive = rep.min_eigenvalue >= -tol.eigen;
  if (!rep.positive) rep.violations.emplace_back("negative eigenvalue");
  if (rep.r1_norm > 0.5 + tol.norm) rep.violations.emplace_back("|r1| exceeds 1/2");
  if (rep.r2_norm > 0.5 + tol.norm) rep.violations.emplace_back("|r2| exceeds 1/2");
  rep.norms_ok = rep.r1_norm <= 0.5 + tol.norm && rep.r2_norm <= 0.5 + tol.norm;
  rep.product = rep.product_residual <= tol.product;
  return rep;
}

}  // namespace blochorbit
