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

#include "mod2vqls/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <json.hpp>

#include "mod2vqls/circuits.hpp"
#include "mod2vqls/errors.hpp"

namespace mod2vqls::solver {

namespace {

// Stream tags for derive_seed.
constexpr std::uint64_t kInitTag = 1;
constexpr std::uint64_t kShotTag = 2;

std::vector<std::size_t> output_register(std::size_t n, std::size_t m) {
    std::vector<std::size_t> reg(m);
    std::iota(reg.begin(), reg.end(), n + 1);
    return reg;
}

AnsatzParams params_for(const gf2::BitMatrix &a, const SolveConfig &config,
                        std::vector<double> theta) {
    return {std::move(theta), config.ansatz_kind, config.layers_for(a.cols())};
}

void check_system(const gf2::BitMatrix &a, const gf2::BitVector &b) {
    if (b.size() != a.rows()) {
        throw InvalidInput("b has length " + std::to_string(b.size()) + " but A has " +
                           std::to_string(a.rows()) + " rows");
    }
}

OptimizeResult optimize_attempt(const gf2::BitMatrix &a, const gf2::BitVector &b,
                                const SolveConfig &config, std::vector<double> start) {
    const std::size_t layers = config.layers_for(a.cols());
    const Objective cost = [&](std::span<const double> theta) {
        return simulated_cost(a, b, {{theta.begin(), theta.end()}, config.ansatz_kind, layers});
    };
    OptimizerOptions options;
    options.initial_radius = config.initial_trust_radius;
    options.final_radius = config.final_trust_radius;
    options.target_value = config.cost_tolerance;
    options.max_evaluations = config.max_iterations;

    auto r = config.optimizer == OptimizerKind::Sweep
                 ? minimize_sinusoidal_sweep(cost, std::move(start), options)
                 : minimize_linear_trust_region(cost, std::move(start), options);
    return {std::move(r.x), r.evaluations, r.value, r.reason};
}

} // namespace

std::string to_string(ObservationMode mode) {
    return mode == ObservationMode::Exact ? "exact" : "shots";
}

ObservationMode parse_observation_mode(const std::string &name) {
    if (name == "exact") {
        return ObservationMode::Exact;
    }
    if (name == "shots") {
        return ObservationMode::Shots;
    }
    throw InvalidInput("unknown observation mode: " + name);
}

std::string to_string(OptimizerKind kind) {
    return kind == OptimizerKind::Sweep ? "sweep" : "cobyla";
}

OptimizerKind parse_optimizer_kind(const std::string &name) {
    if (name == "sweep") {
        return OptimizerKind::Sweep;
    }
    if (name == "cobyla") {
        return OptimizerKind::TrustRegion;
    }
    throw InvalidInput("unknown optimizer: " + name);
}

void SolveConfig::validate() const {
    if (!(cost_tolerance > 0.0 && cost_tolerance < 1.0)) {
        throw InvalidInput("cost_tolerance must lie in (0, 1)");
    }
    if (!(final_trust_radius > 0.0 && final_trust_radius < initial_trust_radius)) {
        throw InvalidInput("need 0 < final_trust_radius < initial_trust_radius");
    }
    if (max_iterations < 1) {
        throw InvalidInput("max_iterations must be at least 1");
    }
    if (!(support_cutoff > 0.0 && support_cutoff < 1.0)) {
        throw InvalidInput("support_cutoff must lie in (0, 1)");
    }
    if (mode == ObservationMode::Shots && shots < 1) {
        throw InvalidInput("shots must be at least 1");
    }
}

circuits::Circuit build_ansatz(const AnsatzParams &params, std::size_t n) {
    analytic::validate(params, n);
    if (params.kind == AnsatzKind::Rotations) {
        return circuits::build_rotations_ansatz(params.theta);
    }
    return circuits::build_brickwork_ansatz(n, params.layers, params.theta);
}

sim::StateVector variational_state(const gf2::BitMatrix &a, const AnsatzParams &params) {
    const auto circuit = circuits::build_full_variational_circuit(a, build_ansatz(params, a.cols()));
    return sim::run_circuit(sim::StateVector(circuit.num_qubits()), circuit);
}

double simulated_cost(const gf2::BitMatrix &a, const gf2::BitVector &b,
                      const AnsatzParams &params) {
    check_system(a, b);
    const auto psi = variational_state(a, params);
    const auto reg = output_register(a.cols(), a.rows());
    const double overlap = sim::marginal_probability(psi, reg, b);
    return std::clamp(1.0 - overlap, 0.0, 1.0);
}

std::vector<double> initial_theta(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> theta(count);
    for (auto &t : theta) {
        t = uniform_real(rng, -2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
    }
    return theta;
}

OptimizeResult optimize(const gf2::BitMatrix &a, const gf2::BitVector &b, const SolveConfig &config) {
    const std::size_t count =
        analytic::parameter_count(config.ansatz_kind, a.cols(), config.layers_for(a.cols()));
    return optimize_from(a, b, config, initial_theta(count, derive_seed(config.seed, {kInitTag})));
}

OptimizeResult optimize_from(const gf2::BitMatrix &a, const gf2::BitVector &b,
                             const SolveConfig &config, std::vector<double> start) {
    check_system(a, b);
    config.validate();
    analytic::validate(params_for(a, config, start), a.cols());
    return optimize_attempt(a, b, config, std::move(start));
}

ExtractedSolutions extract_solutions(const gf2::BitMatrix &a, const gf2::BitVector &b,
                                     std::span<const double> theta_star,
                                     const SolveConfig &config) {
    check_system(a, b);
    const auto psi =
        variational_state(a, params_for(a, config, {theta_star.begin(), theta_star.end()}));

    std::set<std::string> observed;
    if (config.mode == ObservationMode::Exact) {
        observed = sim::support(psi, config.support_cutoff);
    } else {
        Rng rng(derive_seed(config.seed, {kShotTag}));
        for (const auto &[bits, count] : sim::sample(psi, config.shots, rng)) {
            observed.insert(bits);
        }
    }

    ExtractedSolutions out;
    const std::size_t n = a.cols();
    for (const auto &bits : observed) {
        auto x = gf2::BitVector::from_string(std::string_view(bits).substr(0, n));
        if (gf2::mat_vec_mod2(a, x) == b) {
            out.valid.insert(std::move(x));
        } else {
            out.invalid.insert(std::move(x));
        }
    }
    return out;
}

SolveReport solve(const gf2::BitMatrix &a, const gf2::BitVector &b, const SolveConfig &config) {
    check_system(a, b);
    config.validate();

    SolveReport report;
    std::size_t total_iterations = 0;
    for (std::size_t attempt = 0; attempt <= config.restarts; ++attempt) {
        SolveConfig attempt_config = config;
        if (attempt > 0) {
            attempt_config.seed = derive_seed(config.seed, {attempt});
        }
        auto opt = optimize(a, b, attempt_config);
        auto found = extract_solutions(a, b, opt.theta, attempt_config);
        total_iterations += opt.iterations;

        report.solved = !found.valid.empty();
        report.valid_solutions = std::move(found.valid);
        report.invalid_candidates = std::move(found.invalid);
        report.final_cost = opt.final_cost;
        report.optimal_theta = std::move(opt.theta);
        report.stop_reason = opt.stop_reason;
        if (report.solved) {
            break;
        }
    }
    report.iterations = total_iterations;
    return report;
}

std::string to_json(const SolveReport &report) {
    nlohmann::ordered_json j;
    j["solved"] = report.solved;
    auto strings = [](const gf2::SolutionSet &set) {
        std::vector<std::string> out;
        for (const auto &x : set) {
            out.push_back(x.to_string());
        }
        return out;
    };
    j["valid_solutions"] = strings(report.valid_solutions);
    j["invalid_candidates"] = strings(report.invalid_candidates);
    j["iterations"] = report.iterations;
    j["final_cost"] = report.final_cost;
    j["stop_reason"] = to_string(report.stop_reason);
    j["optimal_theta"] = report.optimal_theta;
    return j.dump();
}

} // namespace mod2vqls::solver
