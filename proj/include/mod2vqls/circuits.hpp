// Copyright 2026 The Mod2VQLS Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>

#include "mod2vqls/circuit.hpp"
#include "mod2vqls/gf2.hpp"

/// Circuit builders: the matrix-vector operator, state preparation, the two
/// variational ansatze and the two-input adder demo.
namespace mod2vqls::circuits {

/// Matrix-vector product circuit on n + m qubits (n = A.cols, m = A.rows).
///
/// Emits CNOT(j, n + i) for every a_ij = 1, column-major (j outer, i inner).
/// Applied to |x>|0^m> it produces |x>|Ax>. The gates all commute, so the
/// emission order is a convention only.
Circuit build_matvec_operator(const gf2::BitMatrix &a);

/// One X per set bit of x on qubits 1..x.size() of a `total_qubits` circuit.
Circuit build_state_prep(const gf2::BitVector &x, std::size_t total_qubits);

/// RY(j, theta_j) on each of theta.size() qubits.
Circuit build_rotations_ansatz(std::span<const double> theta);

/// Number of two-qubit bricks in a brickwork of `layers` layers. Odd layers
/// pair (1,2),(3,4),...; even layers pair (2,3),(4,5),...
std::size_t brickwork_brick_count(std::size_t n_qubits, std::size_t layers);

/// Each brick carries two RY angles.
std::size_t brickwork_parameter_count(std::size_t n_qubits, std::size_t layers);

/// Brickwork ansatz: every brick on (a, a+1) is RY(a, p) RY(a+1, p') CZ(a, a+1).
/// Parameters are consumed layer by layer, brick by brick, lower qubit first.
Circuit build_brickwork_ansatz(std::size_t n_qubits, std::size_t layers,
                               std::span<const double> params);

/// Ansatz on qubits 1..n followed by the matrix-vector operator of A, on
/// n + m qubits.
Circuit build_full_variational_circuit(const gf2::BitMatrix &a, const Circuit &ansatz);

/// Three-qubit demo: RY(1, 2 theta) RY(2, 2 phi) CNOT(1,3) CNOT(2,3). The
/// target reads 1 with probability sin^2 theta cos^2 phi + cos^2 theta sin^2 phi.
Circuit build_adder_demo(double theta, double phi);

} // namespace mod2vqls::circuits
