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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mod2vqls/analytic.hpp"
#include "mod2vqls/circuit.hpp"
#include "mod2vqls/gf2.hpp"
#include "mod2vqls/state_vector.hpp"
#include "mod2vqls/optimizers.hpp"

/// The variational solve loop: simulate the cost of A V(theta)|0>, optimize
/// theta without derivatives, then read candidate solutions off the
/// optimized state and check each one against Ax = b.
namespace mod2vqls::solver {

using analytic::AnsatzKind;
using analytic::AnsatzParams;

enum class ObservationMode { Exact, Shots };

std::string to_string(ObservationMode mode);
ObservationMode parse_observation_mode(const std::string &name);

/// Sweep: sinusoidal coordinate sweeps. TrustRegion: linear-model trust region.
enum class OptimizerKind { Sweep, TrustRegion };

/// "sweep" | "cobyla".
std::string to_string(OptimizerKind kind);
OptimizerKind parse_optimizer_kind(const std::string &name);

struct SolveConfig {
    AnsatzKind ansatz_kind = AnsatzKind::Rotations;
    /// Brickwork depth; nullopt means one layer per input qubit.
    std::optional<std::size_t> layers;
    OptimizerKind optimizer = OptimizerKind::Sweep;
    std::size_t max_iterations = 500;
    double cost_tolerance = 1e-6;
    double initial_trust_radius = 1.0;
    double final_trust_radius = 1e-4;
    ObservationMode mode = ObservationMode::Exact;
    std::size_t shots = 1024;
    double support_cutoff = 1e-4;
    /// Extra reseeded attempts after an unsolved run.
    std::size_t restarts = 0;
    std::uint64_t seed = 0;

    /// Throws InvalidInput on out-of-range settings.
    void validate() const;

    /// Brickwork depth used for an n-column system.
    [[nodiscard]] std::size_t layers_for(std::size_t n) const { return layers.value_or(n); }
};

struct SolveReport {
    bool solved = false;
    gf2::SolutionSet valid_solutions;
    gf2::SolutionSet invalid_candidates;
    std::size_t iterations = 0;
    double final_cost = 1.0;
    std::vector<double> optimal_theta;
    StopReason stop_reason = StopReason::MaxIterations;

    friend bool operator==(const SolveReport &, const SolveReport &) = default;
};

/// Ansatz circuit on n qubits for the given parameters.
circuits::Circuit build_ansatz(const AnsatzParams &params, std::size_t n);

/// psi = A V(theta) |0...0> on n + m qubits.
sim::StateVector variational_state(const gf2::BitMatrix &a, const AnsatzParams &params);

/// 1 - P(output register = b) for psi(theta), clamped to [0, 1].
double simulated_cost(const gf2::BitMatrix &a, const gf2::BitVector &b,
                      const AnsatzParams &params);

struct OptimizeResult {
    std::vector<double> theta;
    std::size_t iterations = 0;
    double final_cost = 1.0;
    StopReason stop_reason = StopReason::MaxIterations;
};

/// Uniform start point over [-2 pi, 2 pi] drawn from `seed`.
std::vector<double> initial_theta(std::size_t count, std::uint64_t seed);

/// Minimizes simulated_cost from the seeded random start. One cost
/// evaluation is one iteration.
OptimizeResult optimize(const gf2::BitMatrix &a, const gf2::BitVector &b, const SolveConfig &config);

/// As above, from an explicit start point.
OptimizeResult optimize_from(const gf2::BitMatrix &a, const gf2::BitVector &b,
                             const SolveConfig &config, std::vector<double> start);

struct ExtractedSolutions {
    gf2::SolutionSet valid;
    gf2::SolutionSet invalid;
};

/// Candidate bitstrings observed in psi(theta_star) (exact support or shot
/// histogram), projected onto the input register and classified by Ax == b.
ExtractedSolutions extract_solutions(const gf2::BitMatrix &a, const gf2::BitVector &b,
                                     std::span<const double> theta_star,
                                     const SolveConfig &config);

SolveReport solve(const gf2::BitMatrix &a, const gf2::BitVector &b, const SolveConfig &config);

/// Deterministic JSON rendering of a report (sets in sorted order).
std::string to_json(const SolveReport &report);

} // namespace mod2vqls::solver
