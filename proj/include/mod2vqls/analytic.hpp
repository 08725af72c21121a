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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mod2vqls/gf2.hpp"

/// Closed forms for the rotations ansatz V(theta) = prod_j RY_j(theta_j).
///
/// With A|x>|0> = |x>|Ax>, the variational state is
///   psi(theta) = sum_x alpha_x(theta) |x>|Ax>,
///   alpha_x(theta) = prod_j cos(theta_j/2)^(1-x_j) sin(theta_j/2)^x_j,
/// and the cost 1 - |<b|psi>|^2 only sees the solution set of Ax = b. These
/// functions never touch the simulator and serve as its oracle.
namespace mod2vqls::analytic {

enum class AnsatzKind { Rotations, Brickwork };

std::string to_string(AnsatzKind kind);
AnsatzKind parse_ansatz_kind(const std::string &name);

struct AnsatzParams {
    std::vector<double> theta;
    AnsatzKind kind = AnsatzKind::Rotations;
    std::size_t layers = 0; ///< brickwork only
};

/// Parameter count of an ansatz on n input qubits.
std::size_t parameter_count(AnsatzKind kind, std::size_t n, std::size_t layers);

/// Throws InvalidInput when params do not fit an ansatz on n qubits or hold a
/// non-finite angle.
void validate(const AnsatzParams &params, std::size_t n);

/// Reduce an angle into [-2 pi, 2 pi], the period of RY.
double canonical_angle(double theta);

double alpha(const gf2::BitVector &x, std::span<const double> theta);

/// 1 - sum over solutions x of alpha_x^2. Inconsistent systems give 1.
double analytic_cost(const gf2::BitMatrix &a, const gf2::BitVector &b,
                     std::span<const double> theta);

/// d cost / d theta_j = sum over solutions x of (-1)^(x_j) alpha_x alpha_(x xor e_j).
std::vector<double> analytic_gradient(const gf2::BitMatrix &a, const gf2::BitVector &b,
                                      std::span<const double> theta);

/// Cost at theta_j = k pi / 2 for odd k: 1 - 2^-rank(A).
double predicted_plateau_cost(const gf2::BitMatrix &a);

/// [k]_q = (q^k - q^-k) / (q - q^-1). q must not be 0, 1 or -1.
std::complex<double> q_integer(long k, std::complex<double> q);

/// xi = exp(i pi / 4n), a primitive 8n-th root of unity.
std::complex<double> xi(std::size_t n);

/// cos(theta/2)^(1-x) sin(theta/2)^x at theta = pi p / 2n, computed as the
/// xi-integer ratio [2n(1 - x) + p]_xi / [2n]_xi.
double q_integer_amplitude(bool x_j, std::size_t p_j, std::size_t n);

} // namespace mod2vqls::analytic
