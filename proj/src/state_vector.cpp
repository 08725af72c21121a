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

#include "mod2vqls/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <utility>

#include "mod2vqls/errors.hpp"

namespace mod2vqls::sim {

namespace {

void check_qubit_count(std::size_t num_qubits) {
    if (num_qubits > kMaxQubits) {
        throw CapacityError("statevector limited to " + std::to_string(kMaxQubits) +
                            " qubits, requested " + std::to_string(num_qubits));
    }
}

} // namespace

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
    amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw InvalidInput("amplitude count must be a power of two");
    }
    StateVector s;
    s.num_qubits_ = static_cast<std::size_t>(std::countr_zero(dim));
    check_qubit_count(s.num_qubits_);
    s.amplitudes_ = std::move(amplitudes);
    if (std::abs(s.norm_squared() - 1.0) > kNormDriftTolerance) {
        throw InvalidInput("amplitudes are not normalized");
    }
    return s;
}

Complex StateVector::amplitude(std::uint64_t index) const {
    if (index >= amplitudes_.size()) {
        throw InvalidInput("basis index out of range");
    }
    return amplitudes_[index];
}

Complex StateVector::amplitude(const gf2::BitVector &bits) const {
    if (bits.size() != num_qubits_) {
        throw InvalidInput("basis label length does not match qubit count");
    }
    return amplitudes_[bits.to_index()];
}

double StateVector::norm_squared() const noexcept {
    return std::accumulate(amplitudes_.begin(), amplitudes_.end(), 0.0,
                           [](double acc, const Complex &a) { return acc + std::norm(a); });
}

void StateVector::check_norm() const {
    const double drift = std::abs(norm_squared() - 1.0);
    if (drift > kNormDriftTolerance) {
        throw InternalError("statevector norm drifted by " + std::to_string(drift));
    }
}

void StateVector::apply(const Gate &gate) {
    validate_gate(gate, num_qubits_);
    switch (gate.kind) {
    case GateKind::X:
        apply_x(gate.first);
        break;
    case GateKind::H:
        apply_h(gate.first);
        break;
    case GateKind::RY:
        apply_ry(gate.first, gate.angle);
        break;
    case GateKind::CNOT:
        apply_cnot(gate.first, gate.second);
        break;
    case GateKind::CZ:
        apply_cz(gate.first, gate.second);
        break;
    }
}

// Single-qubit kernels visit each (|..0..>, |..1..>) amplitude pair once.
void StateVector::apply_x(std::size_t q) {
    const std::uint64_t stride = mask(q);
    const std::uint64_t dim = amplitudes_.size();
    for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
        for (std::uint64_t i = base; i < base + stride; ++i) {
            std::swap(amplitudes_[i], amplitudes_[i + stride]);
        }
    }
}

void StateVector::apply_h(std::size_t q) {
    const std::uint64_t stride = mask(q);
    const std::uint64_t dim = amplitudes_.size();
    const double r = 1.0 / std::sqrt(2.0);
    for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
        for (std::uint64_t i = base; i < base + stride; ++i) {
            const Complex a0 = amplitudes_[i];
            const Complex a1 = amplitudes_[i + stride];
            amplitudes_[i] = r * (a0 + a1);
            amplitudes_[i + stride] = r * (a0 - a1);
        }
    }
}

void StateVector::apply_ry(std::size_t q, double theta) {
    const std::uint64_t stride = mask(q);
    const std::uint64_t dim = amplitudes_.size();
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
        for (std::uint64_t i = base; i < base + stride; ++i) {
            const Complex a0 = amplitudes_[i];
            const Complex a1 = amplitudes_[i + stride];
            amplitudes_[i] = c * a0 - s * a1;
            amplitudes_[i + stride] = s * a0 + c * a1;
        }
    }
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
    const std::uint64_t cm = mask(control);
    const std::uint64_t tm = mask(target);
    const std::uint64_t dim = amplitudes_.size();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & cm) != 0 && (i & tm) == 0) {
            std::swap(amplitudes_[i], amplitudes_[i | tm]);
        }
    }
}

void StateVector::apply_cz(std::size_t a, std::size_t b) {
    const std::uint64_t both = mask(a) | mask(b);
    const std::uint64_t dim = amplitudes_.size();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & both) == both) {
            amplitudes_[i] = -amplitudes_[i];
        }
    }
}

std::string bitstring(std::uint64_t index, std::size_t num_qubits) {
    std::string s(num_qubits, '0');
    for (std::size_t k = 0; k < num_qubits; ++k) {
        if (((index >> (num_qubits - 1 - k)) & 1U) != 0) {
            s[k] = '1';
        }
    }
    return s;
}

StateVector basis_state(const gf2::BitVector &bits) {
    StateVector s(bits.size());
    for (std::size_t k = 1; k <= bits.size(); ++k) {
        if (bits.get(k)) {
            s.apply(Gate::x(k));
        }
    }
    return s;
}

StateVector apply_gate(StateVector state, const Gate &gate) {
    state.apply(gate);
    state.check_norm();
    return state;
}

StateVector run_circuit(StateVector state, const circuits::Circuit &circuit) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw InvalidInput("run_circuit: circuit has " + std::to_string(circuit.num_qubits()) +
                           " qubits, state has " + std::to_string(state.num_qubits()));
    }
    for (const auto &g : circuit.gates()) {
        state.apply(g);
    }
    state.check_norm();
    return state;
}

double marginal_probability(const StateVector &state, std::span<const std::size_t> register_qubits,
                            const gf2::BitVector &bits) {
    if (bits.size() != register_qubits.size()) {
        throw InvalidInput("marginal_probability: bits and register differ in length");
    }
    const std::size_t q = state.num_qubits();
    std::uint64_t reg_mask = 0;
    std::uint64_t pattern = 0;
    for (std::size_t k = 0; k < register_qubits.size(); ++k) {
        const std::size_t qubit = register_qubits[k];
        if (qubit == 0 || qubit > q) {
            throw InvalidInput("marginal_probability: register qubit out of range");
        }
        const std::uint64_t m = std::uint64_t{1} << (q - qubit);
        if ((reg_mask & m) != 0) {
            throw InvalidInput("marginal_probability: repeated register qubit");
        }
        reg_mask |= m;
        if (bits.get(k + 1)) {
            pattern |= m;
        }
    }
    double p = 0.0;
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & reg_mask) == pattern) {
            p += std::norm(amps[i]);
        }
    }
    return p;
}

Histogram sample(const StateVector &state, std::size_t shots, Rng &rng) {
    if (shots == 0) {
        throw InvalidInput("sample: shots must be at least 1");
    }
    const auto amps = state.amplitudes();
    std::vector<double> cdf(amps.size());
    double running = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        running += std::norm(amps[i]);
        cdf[i] = running;
    }
    std::map<std::uint64_t, std::size_t> counts;
    for (std::size_t s = 0; s < shots; ++s) {
        const double u = uniform01(rng) * running;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        auto index = static_cast<std::uint64_t>(std::distance(cdf.begin(), it));
        index = std::min<std::uint64_t>(index, amps.size() - 1);
        ++counts[index];
    }
    Histogram hist;
    for (const auto &[index, c] : counts) {
        hist.emplace(bitstring(index, state.num_qubits()), c);
    }
    return hist;
}

std::set<std::string> support(const StateVector &state, double cutoff) {
    if (!(cutoff > 0.0 && cutoff < 1.0)) {
        throw InvalidInput("support: cutoff must lie in (0, 1)");
    }
    std::set<std::string> out;
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (std::norm(amps[i]) >= cutoff) {
            out.insert(bitstring(i, state.num_qubits()));
        }
    }
    return out;
}

} // namespace mod2vqls::sim
