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

#include <catch2/catch_amalgamated.hpp>

#include "support/test_support.hpp"

namespace blochorbit {
namespace {

using testing::expm_taylor;
using testing::kPi;

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

TEST_CASE("Pauli matrices") {
  Matrix2c z;
  z << 1, 0, 0, -1;
  CHECK(max_abs(pauli(Axis::z) - z) == 0.0);
  for (Axis a : {Axis::x, Axis::y, Axis::z}) {
    const Matrix2c p = pauli(a);
    CHECK(max_abs(p * p - Matrix2c::Identity()) == 0.0);
    CHECK(std::abs(p.trace()) == 0.0);
    CHECK(max_abs(p - p.adjoint()) == 0.0);
  }
  CHECK(std::abs(pauli(Axis::y).trace()) == 0.0);
}

TEST_CASE("axis parsing and cyclic order") {
  CHECK(parse_axis("x") == Axis::x);
  CHECK(parse_axis("Z") == Axis::z);
  CHECK(parse_axis("2") == Axis::y);
  CHECK_THROWS_AS(parse_axis("w"), std::invalid_argument);
  CHECK(next(Axis::z) == Axis::x);
  CHECK(next(next(Axis::x)) == Axis::z);
}

TEST_CASE("basis is trace-orthonormal in the documented layout") {
  const auto& xs = basis();
  for (int j = 0; j < 16; ++j) {
    CHECK(xs[j].index == j);
    for (int k = 0; k < 16; ++k) {
      const cplx ip = (xs[j].matrix * xs[k].matrix).trace();
      CHECK(std::abs(ip - cplx{j == k ? 1.0 : 0.0}) < 1e-12);
    }
  }
  CHECK(max_abs(xs[0].matrix - Matrix4c::Identity() / 2.0) == 0.0);
  CHECK(std::abs((xs[3].matrix * xs[3].matrix).trace() - 1.0) < 1e-15);
  CHECK(std::abs((xs[7].matrix * xs[8].matrix).trace()) < 1e-15);
  // Local generators first, then sigma_a (x) sigma_b row-major.
  const Matrix2c id = Matrix2c::Identity();
  CHECK(max_abs(xs[2].matrix - kron(pauli(Axis::y), id) / 2.0) == 0.0);
  CHECK(max_abs(xs[6].matrix - kron(id, pauli(Axis::z)) / 2.0) == 0.0);
  CHECK(max_abs(xs[8].matrix - kron(pauli(Axis::x), pauli(Axis::y)) / 2.0) == 0.0);
  CHECK(max_abs(xs[13].matrix - kron(pauli(Axis::z), pauli(Axis::x)) / 2.0) == 0.0);
  CHECK(xs[14].label == "sz(x)sy");
}

TEST_CASE("one-dimensional exponential closed form") {
  CHECK(max_abs(exp_one_dim(Axis::z, Axis::z, 0.0) - Matrix4c::Identity()) < 1e-15);

  const Matrix4c expected = -kI * kron(pauli(Axis::x), pauli(Axis::y));
  CHECK(max_abs(exp_one_dim(Axis::x, Axis::y, kPi) - expected) < 1e-15);
  const Matrix4c h = kPi / 2 * kron(pauli(Axis::x), pauli(Axis::y));
  CHECK(max_abs(expm_taylor(-kI * h) - expected) < 1e-12);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const Axis i = testing::random_axis(rng), j = testing::random_axis(rng);
    const double phi = testing::uniform(rng, -3 * kPi, 3 * kPi);
    const Matrix4c u = exp_one_dim(i, j, phi);
    CHECK(is_unitary(u, 1e-12));
    const Matrix4c ref = expm_taylor(-kI * (phi / 2) * kron(pauli(i), pauli(j)));
    CHECK(max_abs(u - ref) < 1e-10);
  }
}

TEST_CASE("Heisenberg exponential closed form") {
  CHECK(max_abs(exp_heisenberg(0.7, 0.0) - Matrix4c::Identity()) < 1e-15);

  Matrix4c exchange = Matrix4c::Zero();
  for (Axis a : {Axis::x, Axis::y, Axis::z}) exchange += kron(pauli(a), pauli(a));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const double c = testing::uniform(rng, -2, 2), phi = testing::uniform(rng, -3 * kPi, 3 * kPi);
    const Matrix4c u = exp_heisenberg(c, phi);
    CHECK(is_unitary(u, 1e-12));
    CHECK(max_abs(u - expm_taylor(-kI * (c * phi / 2) * exchange)) < 1e-10);
  }

  SECTION("equals the commuting product of one-dimensional factors") {
    // exp[-i(c phi/2) sum] = prod_a exp[-i (c phi/2) sigma_a sigma_a].
    const double c = 1.0, phi = kPi / 4;
    const Matrix4c prod = exp_one_dim(Axis::x, Axis::x, c * phi) *
                          exp_one_dim(Axis::y, Axis::y, c * phi) *
                          exp_one_dim(Axis::z, Axis::z, c * phi);
    CHECK(max_abs(exp_heisenberg(c, phi) - prod) < 1e-14);
    CHECK(phase_overlap(exp_heisenberg(c, phi), prod) == Catch::Approx(1.0).epsilon(1e-14));
    // Doubling the factor angles is a different operation, not a phase.
    const Matrix4c doubled = exp_one_dim(Axis::x, Axis::x, kPi / 2) *
                             exp_one_dim(Axis::y, Axis::y, kPi / 2) *
                             exp_one_dim(Axis::z, Axis::z, kPi / 2);
    CHECK(phase_overlap(exp_heisenberg(c, phi), doubled) < 0.99);
  }
}

TEST_CASE("sigma_a (x) sigma_a generators commute") {
  std::array<Matrix4c, 3> y;
  for (int a = 0; a < 3; ++a) {
    const Matrix2c p = pauli(axis_from_index(a));
    y[a] = 0.5 * kI * kron(p, p);
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(max_abs(y[a] * y[b] - y[b] * y[a]) < 1e-12);
}

TEST_CASE("phase comparison helpers") {
  const Matrix4c u = exp_one_dim(Axis::x, Axis::z, 0.3);
  const Matrix4c v = std::exp(kI * 1.1) * u;
  CHECK(phase_overlap(u, v) == Catch::Approx(1.0));
  CHECK(phase_distance(u, v) < 1e-14);
  CHECK(phase_distance(u, exp_one_dim(Axis::x, Axis::z, 0.4)) > 1e-3);
}

}  // namespace
}  // namespace blochorbit
