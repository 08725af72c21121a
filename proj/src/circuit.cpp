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

#include "mod2vqls/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "mod2vqls/errors.hpp"

namespace mod2vqls::sim {

std::string gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::X:
        return "X";
    case GateKind::H:
        return "H";
    case GateKind::RY:
        return "RY";
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::CZ:
        return "CZ";
    }
    return "?";
}

void validate_gate(const Gate &gate, std::size_t num_qubits) {
    auto in_range = [num_qubits](std::size_t q) { return q >= 1 && q <= num_qubits; };
    if (!in_range(gate.first)) {
        throw InvalidInput(gate_name(gate.kind) + ": qubit " + std::to_string(gate.first) +
                           " outside 1.." + std::to_string(num_qubits));
    }
    if (gate.is_two_qubit()) {
        if (!in_range(gate.second)) {
            throw InvalidInput(gate_name(gate.kind) + ": qubit " + std::to_string(gate.second) +
                               " outside 1.." + std::to_string(num_qubits));
        }
        if (gate.first == gate.second) {
            throw InvalidInput(gate_name(gate.kind) + ": both operands are qubit " +
                               std::to_string(gate.first));
        }
    }
    if (gate.kind == GateKind::RY && !std::isfinite(gate.angle)) {
        throw InvalidInput("RY: angle must be finite");
    }
}

std::string to_string(const Gate &gate) {
    std::string s = gate_name(gate.kind) + " " + std::to_string(gate.first);
    if (gate.is_two_qubit()) {
        s += " " + std::to_string(gate.second);
    }
    if (gate.kind == GateKind::RY) {
        char buf[64];
        std::snprintf(buf, sizeof buf, " %.6f", gate.angle);
        s += buf;
    }
    return s;
}

} // namespace mod2vqls::sim

namespace mod2vqls::circuits {

Circuit::Circuit(std::size_t num_qubits, std::initializer_list<sim::Gate> gates)
    : num_qubits_(num_qubits) {
    for (const auto &g : gates) {
        add(g);
    }
}

void Circuit::add(const sim::Gate &gate) {
    sim::validate_gate(gate, num_qubits_);
    gates_.push_back(gate);
}

void Circuit::append(const Circuit &other, std::size_t offset) {
    for (auto g : other.gates()) {
        g.first += offset;
        if (g.is_two_qubit()) {
            g.second += offset;
        }
        add(g);
    }
}

std::string to_text(const Circuit &circuit) {
    std::string out;
    for (const auto &g : circuit.gates()) {
        out += sim::to_string(g);
        out += '\n';
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const Circuit &circuit) {
    return os << to_text(circuit);
}

} // namespace mod2vqls::circuits
