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
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "mod2vqls/circuit.hpp"
#include "mod2vqls/gate.hpp"
#include "mod2vqls/gf2.hpp"
#include "mod2vqls/random.hpp"

/// Dense statevector simulation of the five-gate set.
///
/// Basis numbering: qubit 1 is the most significant bit of the amplitude
/// index, so the printed bitstring of index k reads |q1 q2 ... qN> left to
/// right.
namespace mod2vqls::sim {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 24;

/// Norm drift beyond this is reported as an InternalError; states are never
/// renormalized.
inline constexpr double kNormDriftTolerance = 1e-9;

class StateVector {
  public:
    /// |0...0> on `num_qubits` qubits.
    explicit StateVector(std::size_t num_qubits);

    /// Takes ownership of raw amplitudes; the length must be a power of two
    /// and the norm must be 1 within kNormDriftTolerance.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] Complex amplitude(std::uint64_t index) const;
    [[nodiscard]] Complex amplitude(const gf2::BitVector &bits) const;

    [[nodiscard]] double norm_squared() const noexcept;

    /// In-place gate application. Validates indices, does not check norm.
    void apply(const Gate &gate);

    /// Throws InternalError if |norm^2 - 1| > kNormDriftTolerance.
    void check_norm() const;

  private:
    StateVector() = default;

    void apply_x(std::size_t q);
    void apply_h(std::size_t q);
    void apply_ry(std::size_t q, double theta);
    void apply_cnot(std::size_t control, std::size_t target);
    void apply_cz(std::size_t a, std::size_t b);

    [[nodiscard]] std::uint64_t mask(std::size_t qubit) const noexcept {
        return std::uint64_t{1} << (num_qubits_ - qubit);
    }

    std::size_t num_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

/// Printed bitstring of basis index `index`.
std::string bitstring(std::uint64_t index, std::size_t num_qubits);

StateVector basis_state(const gf2::BitVector &bits);

StateVector apply_gate(StateVector state, const Gate &gate);

/// Applies gates in list order; the final norm is checked.
StateVector run_circuit(StateVector state, const circuits::Circuit &circuit);

/// Probability that measuring `register_qubits` yields `bits` (bit k of
/// `bits` corresponds to register_qubits[k - 1]).
double marginal_probability(const StateVector &state, std::span<const std::size_t> register_qubits,
                            const gf2::BitVector &bits);

using Histogram = std::map<std::string, std::size_t>;

/// Draws `shots` full-register measurements.
Histogram sample(const StateVector &state, std::size_t shots, Rng &rng);

/// Bitstrings whose probability is at least `cutoff`.
std::set<std::string> support(const StateVector &state, double cutoff);

} // namespace mod2vqls::sim
