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

#include "blochorbit/evolution.hpp"
#include "blochorbit/state.hpp"

// Brute-force reference path: explicit 4x4 unitaries and partial traces.
// Nothing here calls the coherence-space update formulas.
namespace blochorbit::oracle {

/// U rho U^dagger. Throws std::invalid_argument if U is not unitary to 1e-10.
DensityMatrix4 evolve_matrix(const DensityMatrix4& rho, const Matrix4c& u);

/// Reduced state of the kept qubit (subsystem 1 is the left tensor factor).
Matrix2c partial_trace(const DensityMatrix4& rho, Subsystem keep);
Matrix2c partial_trace(const Matrix4c& rho, Subsystem keep);

/// v with rho = I/2 + v . sigma, i.e. v_a = Tr(rho sigma_a)/2.
Vec3 coherence_vector(const Matrix2c& rho);

/// exp(-i (angle/2) axis . sigma).
Matrix2c spin_rotation(const Vec3& axis, double angle);

/// The exact unitary implemented by a spec.
Matrix4c unitary_for(const InteractionSpec& spec);

/// from_density(U rho U^dagger) with U = unitary_for(spec).
TwoQubitState evolve_state(const TwoQubitState& s, const InteractionSpec& spec);

}  // namespace blochorbit::oracle
