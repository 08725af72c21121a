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

#include "mod2vqls/circuits.hpp"

#include "mod2vqls/errors.hpp"

namespace mod2vqls::circuits {

using sim::Gate;

Circuit build_matvec_operator(const gf2::BitMatrix &a) {
    const std::size_t n = a.cols();
    const std::size_t m = a.rows();
    Circuit c(n + m);
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 1; i <= m; ++i) {
            if (a.get(i, j)) {
                c.add(Gate::cnot(j, n + i));
            }
        }
    }
    return c;
}

Circuit build_state_prep(const gf2::BitVector &x, std::size_t total_qubits) {
    if (x.size() > total_qubits) {
        throw InvalidInput("build_state_prep: " + std::to_string(x.size()) +
                           " bits do not fit on " + std::to_string(total_qubits) + " qubits");
    }
    Circuit c(total_qubits);
    for (std::size_t k = 1; k <= x.size(); ++k) {
        if (x.get(k)) {
            c.add(Gate::x(k));
        }
    }
    return c;
}

Circuit build_rotations_ansatz(std::span<const double> theta) {
    Circuit c(theta.size());
    for (std::size_t j = 0; j < theta.size(); ++j) {
        c.add(Gate::ry(j + 1, theta[j]));
    }
    return c;
}

std::size_t brickwork_brick_count(std::size_t n_qubits, std::size_t layers) {
    if (n_qubits < 2) {
        return 0;
    }
    const std::size_t odd_layer = n_qubits / 2;        // pairs starting at 1
    const std::size_t even_layer = (n_qubits - 1) / 2; // pairs starting at 2
    const std::size_t odd_layers = (layers + 1) / 2;
    const std::size_t even_layers = layers / 2;
    return odd_layers * odd_layer + even_layers * even_layer;
}

std::size_t brickwork_parameter_count(std::size_t n_qubits, std::size_t layers) {
    return 2 * brickwork_brick_count(n_qubits, layers);
}

Circuit build_brickwork_ansatz(std::size_t n_qubits, std::size_t layers,
                               std::span<const double> params) {
    const std::size_t expected = brickwork_parameter_count(n_qubits, layers);
    if (params.size() != expected) {
        throw InvalidInput("build_brickwork_ansatz: expected " + std::to_string(expected) +
                           " parameters, got " + std::to_string(params.size()));
    }
    Circuit c(n_qubits);
    std::size_t p = 0;
    for (std::size_t layer = 1; layer <= layers; ++layer) {
        const std::size_t start = (layer % 2 == 1) ? 1 : 2;
        for (std::size_t q = start; q + 1 <= n_qubits; q += 2) {
            c.add(Gate::ry(q, params[p++]));
            c.add(Gate::ry(q + 1, params[p++]));
            c.add(Gate::cz(q, q + 1));
        }
    }
    return c;
}

Circuit build_full_variational_circuit(const gf2::BitMatrix &a, const Circuit &ansatz) {
    if (ansatz.num_qubits() != a.cols()) {
        throw InvalidInput("build_full_variational_circuit: ansatz acts on " +
                           std::to_string(ansatz.num_qubits()) + " qubits but A has " +
                           std::to_string(a.cols()) + " columns");
    }
    Circuit c(a.cols() + a.rows());
    c.append(ansatz);
    c.append(build_matvec_operator(a));
    return c;
}

Circuit build_adder_demo(double theta, double phi) {
    return Circuit(3, {Gate::ry(1, 2.0 * theta), Gate::ry(2, 2.0 * phi), Gate::cnot(1, 3),
                       Gate::cnot(2, 3)});
}

} // namespace mod2vqls::circuits
