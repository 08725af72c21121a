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
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mod2vqls/analytic.hpp"
#include "mod2vqls/gf2.hpp"
#include "mod2vqls/solver.hpp"

/// Experiment harness: random consistent n x n systems per dimension, solved
/// with a chosen ansatz, aggregated into per-dimension rows.
namespace mod2vqls::bench {

struct BenchmarkRow {
    std::size_t dim = 0;
    analytic::AnsatzKind ansatz = analytic::AnsatzKind::Rotations;
    std::size_t solved_count = 0;
    /// Sum over trials of the distinct valid vectors each trial proposed.
    std::size_t distinct_valid = 0;
    /// Same, for proposals failing Ax = b.
    std::size_t distinct_invalid = 0;
    double avg_iterations = 0.0;

    friend bool operator==(const BenchmarkRow &, const BenchmarkRow &) = default;
};

struct DimRange {
    std::size_t first = 1;
    std::size_t last = 9;
};

/// "a..b" or a single "a".
DimRange parse_dim_range(std::string_view text);

struct BenchmarkOptions {
    DimRange dims;
    std::size_t trials = 10;
    analytic::AnsatzKind ansatz = analytic::AnsatzKind::Rotations;
    std::uint64_t seed = 0;
    /// Template for every trial; its seed field is replaced per trial.
    solver::SolveConfig solve;
};

struct TrialRecord {
    std::size_t dim = 0;
    std::size_t trial = 0;
    std::uint64_t trial_seed = 0;
    gf2::PlantedSystem system;
    solver::SolveReport report;
};

using TrialObserver = std::function<void(const TrialRecord &)>;

/// Seed of trial `trial` at dimension `dim`; independent of every other
/// (dim, trial) pair so ranges can grow without perturbing earlier trials.
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t dim, std::size_t trial);

/// Seed handed to the solver in a given trial.
std::uint64_t solver_seed(std::uint64_t trial_seed);

/// The system solved in a given trial (shared by both ansatze).
gf2::PlantedSystem trial_system(std::uint64_t trial_seed, std::size_t dim);

/// Runs every trial in order. The observer, if set, sees each trial record.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkOptions &options,
                                        const TrialObserver &observer = {});

/// Folds one dimension's trial reports into a row.
BenchmarkRow aggregate(std::size_t dim, analytic::AnsatzKind ansatz,
                       const std::vector<solver::SolveReport> &reports);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Ordinary least squares through (dim, avg_iterations).
LineFit fit_iteration_slope(const std::vector<BenchmarkRow> &rows);

inline constexpr std::string_view kCsvHeader = "dim,ansatz,solved,valid,invalid,avg_iterations";

/// Shortest round-trip decimal, always with a fractional part ("2.0", "3.7").
std::string format_decimal(double value);

void write_csv(std::ostream &out, const std::vector<BenchmarkRow> &rows);
void emit_csv(const std::vector<BenchmarkRow> &rows, const std::string &path);
std::vector<BenchmarkRow> read_csv(std::istream &in);

/// JSON line describing one trial, for --verbose output.
std::string to_json(const TrialRecord &record);

} // namespace mod2vqls::bench
