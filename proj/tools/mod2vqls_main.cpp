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

// Command-line front end: bench, solve and dump-circuit subcommands.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mod2vqls/bench.hpp"
#include "mod2vqls/circuits.hpp"
#include "mod2vqls/gf2.hpp"
#include "mod2vqls/solver.hpp"

namespace {

using namespace mod2vqls;

struct SolverFlags {
    std::string ansatz = "rotations";
    std::string layers = "auto";
    std::uint64_t seed = 0;
    std::string optimizer = "sweep";
    std::string mode = "exact";
    std::size_t shots = 1024;
    double cutoff = 1e-4;
    std::size_t max_iters = 500;
    std::size_t restarts = 0;
};

void add_solver_flags(CLI::App *cmd, SolverFlags &f, bool allow_both) {
    cmd->add_option("--ansatz", f.ansatz, "rotations | brickwork" + std::string(allow_both ? " | both" : ""))
        ->check(allow_both ? CLI::IsMember({"rotations", "brickwork", "both"})
                           : CLI::IsMember({"rotations", "brickwork"}));
    cmd->add_option("--layers", f.layers, "brickwork depth, or 'auto' for one layer per variable");
    cmd->add_option("--seed", f.seed, "master seed");
    cmd->add_option("--optimizer", f.optimizer, "sweep | cobyla")
        ->check(CLI::IsMember({"sweep", "cobyla"}));
    cmd->add_option("--mode", f.mode, "candidate observation: exact | shots")
        ->check(CLI::IsMember({"exact", "shots"}));
    cmd->add_option("--shots", f.shots, "shots per readout in shots mode");
    cmd->add_option("--cutoff", f.cutoff, "support probability cutoff in exact mode");
    cmd->add_option("--max-iters", f.max_iters, "cost evaluations per solve");
    cmd->add_option("--restarts", f.restarts, "extra reseeded attempts after an unsolved run");
}

solver::SolveConfig to_config(const SolverFlags &f) {
    solver::SolveConfig c;
    if (f.layers != "auto") {
        c.layers = std::stoul(f.layers);
    }
    c.seed = f.seed;
    c.optimizer = solver::parse_optimizer_kind(f.optimizer);
    c.mode = solver::parse_observation_mode(f.mode);
    c.shots = f.shots;
    c.support_cutoff = f.cutoff;
    c.max_iterations = f.max_iters;
    c.restarts = f.restarts;
    if (f.ansatz != "both") {
        c.ansatz_kind = analytic::parse_ansatz_kind(f.ansatz);
    }
    return c;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Variational solver for linear systems over GF(2)"};
    app.require_subcommand(1);

    SolverFlags bench_flags;
    bench_flags.ansatz = "both";
    std::string dims = "1..9";
    std::size_t trials = 10;
    std::string out_path;
    bool verbose = false;
    auto *bench_cmd = app.add_subcommand("bench", "Run the per-dimension benchmark");
    bench_cmd->add_option("--dims", dims, "dimension range, e.g. 1..9");
    bench_cmd->add_option("--trials", trials, "systems per dimension");
    bench_cmd->add_option("--out", out_path, "CSV output path (stdout when omitted)");
    bench_cmd->add_flag("--verbose", verbose, "print one JSON record per trial to stderr");
    add_solver_flags(bench_cmd, bench_flags, true);

    SolverFlags solve_flags;
    std::string solve_file;
    auto *solve_cmd = app.add_subcommand("solve", "Solve one system and print its report");
    solve_cmd->add_option("--system-file", solve_file, "system in 'm n' / rows / b format")
        ->required();
    add_solver_flags(solve_cmd, solve_flags, false);

    std::string dump_file;
    auto *dump_cmd = app.add_subcommand("dump-circuit", "Print the matrix-vector circuit");
    dump_cmd->add_option("--system-file", dump_file, "system in 'm n' / rows / b format")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bench_cmd) {
            bench::BenchmarkOptions options;
            options.dims = bench::parse_dim_range(dims);
            options.trials = trials;
            options.seed = bench_flags.seed;
            options.solve = to_config(bench_flags);

            std::vector<analytic::AnsatzKind> kinds;
            if (bench_flags.ansatz == "both") {
                kinds = {analytic::AnsatzKind::Brickwork, analytic::AnsatzKind::Rotations};
            } else {
                kinds = {analytic::parse_ansatz_kind(bench_flags.ansatz)};
            }

            bench::TrialObserver observer;
            if (verbose) {
                observer = [](const bench::TrialRecord &r) { std::cerr << bench::to_json(r) << '\n'; };
            }
            std::vector<bench::BenchmarkRow> rows;
            for (auto kind : kinds) {
                options.ansatz = kind;
                auto part = bench::run_benchmark(options, observer);
                rows.insert(rows.end(), part.begin(), part.end());
            }
            if (out_path.empty()) {
                bench::write_csv(std::cout, rows);
            } else {
                bench::emit_csv(rows, out_path);
            }
        } else if (*solve_cmd) {
            const auto system = gf2::read_system_file(solve_file);
            const auto report = solver::solve(system.a, system.b, to_config(solve_flags));
            std::cout << solver::to_json(report) << '\n';
        } else if (*dump_cmd) {
            const auto system = gf2::read_system_file(dump_file);
            std::cout << circuits::to_text(circuits::build_matvec_operator(system.a));
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
