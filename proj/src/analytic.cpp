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

#include "mod2vqls/analytic.hpp"

#include <cmath>
#include <numbers>

#include "mod2vqls/circuits.hpp"
#include "mod2vqls/errors.hpp"

namespace mod2vqls::analytic {

namespace {

constexpr double kPi = std::numbers::pi;

// Below this |q - 1/q| the closed-form ratio loses all precision.
constexpr double kLaurentSwitch = 1e-8;

void check_theta(std::size_t n, std::span<const double> theta) {
    if (theta.size() != n) {
        throw InvalidInput("theta has length " + std::to_string(theta.size()) + ", expected " +
                           std::to_string(n));
    }
}

} // namespace

std::string to_string(AnsatzKind kind) {
    return kind == AnsatzKind::Rotations ? "rotations" : "brickwork";
}

AnsatzKind parse_ansatz_kind(const std::string &name) {
    if (name == "rotations") {
        return AnsatzKind::Rotations;
    }
    if (name == "brickwork") {
        return AnsatzKind::Brickwork;
    }
    throw InvalidInput("unknown ansatz: " + name);
}

std::size_t parameter_count(AnsatzKind kind, std::size_t n, std::size_t layers) {
    return kind == AnsatzKind::Rotations ? n : circuits::brickwork_parameter_count(n, layers);
}

void validate(const AnsatzParams &params, std::size_t n) {
    const std::size_t expected = parameter_count(params.kind, n, params.layers);
    if (params.theta.size() != expected) {
        throw InvalidInput(to_string(params.kind) + " ansatz on " + std::to_string(n) +
                           " qubits takes " + std::to_string(expected) + " parameters, got " +
                           std::to_string(params.theta.size()));
    }
    for (double t : params.theta) {
        if (!std::isfinite(t)) {
            throw InvalidInput("ansatz parameters must be finite");
        }
    }
}

double canonical_angle(double theta) { return std::remainder(theta, 4.0 * kPi); }

double alpha(const gf2::BitVector &x, std::span<const double> theta) {
    check_theta(x.size(), theta);
    double product = 1.0;
    for (std::size_t j = 1; j <= x.size(); ++j) {
        const double half = canonical_angle(theta[j - 1]) / 2.0;
        product *= x.get(j) ? std::sin(half) : std::cos(half);
    }
    return product;
}

double analytic_cost(const gf2::BitMatrix &a, const gf2::BitVector &b,
                     std::span<const double> theta) {
    check_theta(a.cols(), theta);
    double overlap = 0.0;
    for (const auto &x : gf2::enumerate_solutions(a, b)) {
        const double ax = alpha(x, theta);
        overlap += ax * ax;
    }
    return 1.0 - overlap;
}

std::vector<double> analytic_gradient(const gf2::BitMatrix &a, const gf2::BitVector &b,
                                      std::span<const double> theta) {
    check_theta(a.cols(), theta);
    std::vector<double> grad(a.cols(), 0.0);
    for (const auto &x : gf2::enumerate_solutions(a, b)) {
        const double ax = alpha(x, theta);
        for (std::size_t j = 1; j <= a.cols(); ++j) {
            gf2::BitVector neighbour = x;
            neighbour.flip(j);
            const double sign = x.get(j) ? -1.0 : 1.0;
            grad[j - 1] += sign * ax * alpha(neighbour, theta);
        }
    }
    return grad;
}

double predicted_plateau_cost(const gf2::BitMatrix &a) {
    return 1.0 - std::ldexp(1.0, -static_cast<int>(gf2::rank_mod2(a)));
}

std::complex<double> q_integer(long k, std::complex<double> q) {
    if (q == 0.0 || q == 1.0 || q == -1.0) {
        throw InvalidInput("q_integer: q must not be 0, 1 or -1");
    }
    const std::complex<double> denom = q - 1.0 / q;
    if (std::abs(denom) >= kLaurentSwitch) {
        return (std::pow(q, k) - std::pow(q, -k)) / denom;
    }
    // q^(k-1) + q^(k-3) + ... + q^(1-k); [-k] = -[k].
    const long m = k < 0 ? -k : k;
    std::complex<double> sum = 0.0;
    for (long e = m - 1; e >= 1 - m; e -= 2) {
        sum += std::pow(q, e);
    }
    return k < 0 ? -sum : sum;
}

std::complex<double> xi(std::size_t n) {
    if (n == 0) {
        throw InvalidInput("xi: n must be positive");
    }
    return std::polar(1.0, kPi / (4.0 * static_cast<double>(n)));
}

double q_integer_amplitude(bool x_j, std::size_t p_j, std::size_t n) {
    if (n == 0 || p_j >= 4 * n) {
        throw InvalidInput("q_integer_amplitude: p_j must lie in 0.." +
                           std::to_string(4 * n == 0 ? 0 : 4 * n - 1));
    }
    const auto q = xi(n);
    const long two_n = 2 * static_cast<long>(n);
    const long k = two_n * (x_j ? 0 : 1) + static_cast<long>(p_j);
    const std::complex<double> ratio = q_integer(k, q) / q_integer(two_n, q);
    if (std::abs(ratio.imag()) > 1e-9) {
        throw InternalError("q_integer_amplitude: ratio is not real");
    }
    return ratio.real();
}

} // namespace mod2vqls::analytic
