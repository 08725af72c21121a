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
#include <string>

namespace mod2vqls::sim {

enum class GateKind { X, H, RY, CNOT, CZ };

/// One gate of the five-gate set. Qubit indices are 1-based; `second` is
/// the CNOT target / the other CZ qubit and is unused by one-qubit gates.
struct Gate {
    GateKind kind = GateKind::X;
    std::size_t first = 1;
    std::size_t second = 0;
    double angle = 0.0;

    static Gate x(std::size_t target) { return {GateKind::X, target, 0, 0.0}; }
    static Gate h(std::size_t target) { return {GateKind::H, target, 0, 0.0}; }
    static Gate ry(std::size_t target, double theta) { return {GateKind::RY, target, 0, theta}; }
    static Gate cnot(std::size_t control, std::size_t target) {
        return {GateKind::CNOT, control, target, 0.0};
    }
    static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, a, b, 0.0}; }

    [[nodiscard]] bool is_two_qubit() const noexcept {
        return kind == GateKind::CNOT || kind == GateKind::CZ;
    }

    friend bool operator==(const Gate &, const Gate &) = default;
};

std::string gate_name(GateKind kind);

/// Throws InvalidInput unless every index lies in 1..num_qubits, the two
/// qubits of a two-qubit gate differ, and any angle is finite.
void validate_gate(const Gate &gate, std::size_t num_qubits);

/// Debug text, e.g. "CNOT 1 4" or "RY 2 1.570796".
std::string to_string(const Gate &gate);

} // namespace mod2vqls::sim
