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
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace mod2vqls::solver {

enum class StopReason {
    CostTolerance, ///< objective reached the target value
    StepFloor,     ///< steps shrank to the configured floor without further progress
    MaxIterations, ///< evaluation budget exhausted
    NoParameters,  ///< nothing to optimize; the start point was evaluated once
};

std::string to_string(StopReason reason);

struct OptimizerOptions {
    double initial_radius = 1.0;
    /// Trust-radius floor, or the largest per-sweep angle change that still
    /// counts as movement for the sweep method.
    double final_radius = 1e-4;
    double target_value = 1e-6;
    std::size_t max_evaluations = 500;
};

struct MinimizeResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t evaluations = 0;
    StopReason reason = StopReason::MaxIterations;
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free minimization with linear interpolation models, in the
/// manner of Powell's COBYLA specialised to the unconstrained case.
///
/// The method keeps a simplex of n + 1 evaluated points. The model gradient
/// interpolates the simplex; each iteration steps from the best vertex to the
/// edge of the trust region along the negative model gradient. Failed steps
/// either repair the simplex geometry (vertices too far from the best point
/// or too close to the opposite face) or contract the trust radius. Radius
/// contraction follows the usual schedule: 0.1x while far above the floor,
/// a geometric-mean step in between, then straight to the floor.
///
/// Every objective call counts as one evaluation. The returned point is the
/// best one evaluated.
MinimizeResult minimize_linear_trust_region(const Objective &objective, std::vector<double> x0,
                                            const OptimizerOptions &options);

/// Sequential minimal optimization for objectives that are sinusoidal with
/// period 2 pi in every coordinate, as an RY-parameterised expectation value is.
///
/// Each sweep visits the coordinates in order. For coordinate j the objective
/// is sampled at theta_j = 0, pi/2 and -pi/2 with the others held fixed, which
/// determines a + r cos(theta_j - phi) exactly; theta_j is then moved to the
/// minimiser. A flat slice leaves theta_j untouched. The current point is
/// evaluated after every sweep. Stops when any evaluation reaches the target,
/// when a sweep moves no angle by more than final_radius, or when the budget
/// runs out.
MinimizeResult minimize_sinusoidal_sweep(const Objective &objective, std::vector<double> x0,
                                         const OptimizerOptions &options);

} // namespace mod2vqls::solver
