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

#include "mod2vqls/bench.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mod2vqls/errors.hpp"

namespace mod2vqls::bench {

namespace {

constexpr std::uint64_t kSolverTag = 7;

std::size_t parse_size(std::string_view text, const char *what) {
    std::size_t value = 0;
    const auto *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw InvalidInput(std::string("invalid ") + what + ": '" + std::string(text) + "'");
    }
    return value;
}

double parse_double(std::string_view text) {
    double value = 0.0;
    const auto *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw InvalidInput("invalid number in CSV: '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        out.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

} // namespace

DimRange parse_dim_range(std::string_view text) {
    DimRange r;
    if (const auto dots = text.find(".."); dots != std::string_view::npos) {
        r.first = parse_size(text.substr(0, dots), "dimension range");
        r.last = parse_size(text.substr(dots + 2), "dimension range");
    } else {
        r.first = r.last = parse_size(text, "dimension");
    }
    if (r.first < 1 || r.last < r.first) {
        throw InvalidInput("dimension range must satisfy 1 <= first <= last");
    }
    return r;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t dim, std::size_t trial) {
    return derive_seed(master_seed, {dim, trial});
}

std::uint64_t solver_seed(std::uint64_t trial_seed) { return derive_seed(trial_seed, {kSolverTag}); }

gf2::PlantedSystem trial_system(std::uint64_t seed, std::size_t dim) {
    Rng rng(seed);
    return gf2::random_consistent_system(dim, rng);
}

BenchmarkRow aggregate(std::size_t dim, analytic::AnsatzKind ansatz,
                       const std::vector<solver::SolveReport> &reports) {
    BenchmarkRow row;
    row.dim = dim;
    row.ansatz = ansatz;
    std::size_t iterations = 0;
    for (const auto &r : reports) {
        row.solved_count += r.solved ? 1 : 0;
        row.distinct_valid += r.valid_solutions.size();
        row.distinct_invalid += r.invalid_candidates.size();
        iterations += r.iterations;
    }
    row.avg_iterations =
        reports.empty() ? 0.0
                        : static_cast<double>(iterations) / static_cast<double>(reports.size());
    return row;
}

std::vector<BenchmarkRow> run_benchmark(const BenchmarkOptions &options,
                                        const TrialObserver &observer) {
    if (options.trials < 1) {
        throw InvalidInput("run_benchmark: trials must be at least 1");
    }
    if (options.dims.first < 1 || options.dims.last < options.dims.first) {
        throw InvalidInput("run_benchmark: invalid dimension range");
    }
    options.solve.validate();

    std::vector<BenchmarkRow> rows;
    for (std::size_t dim = options.dims.first; dim <= options.dims.last; ++dim) {
        std::vector<solver::SolveReport> reports;
        reports.reserve(options.trials);
        for (std::size_t t = 0; t < options.trials; ++t) {
            TrialRecord record;
            record.dim = dim;
            record.trial = t;
            record.trial_seed = trial_seed(options.seed, dim, t);
            record.system = trial_system(record.trial_seed, dim);

            solver::SolveConfig config = options.solve;
            config.ansatz_kind = options.ansatz;
            config.seed = solver_seed(record.trial_seed);
            record.report = solver::solve(record.system.a, record.system.b, config);
            if (observer) {
                observer(record);
            }
            reports.push_back(std::move(record.report));
        }
        rows.push_back(aggregate(dim, options.ansatz, reports));
    }
    return rows;
}

LineFit fit_iteration_slope(const std::vector<BenchmarkRow> &rows) {
    if (rows.size() < 2) {
        throw InvalidInput("fit_iteration_slope needs at least two rows");
    }
    const auto count = static_cast<double>(rows.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto &r : rows) {
        mean_x += static_cast<double>(r.dim);
        mean_y += r.avg_iterations;
    }
    mean_x /= count;
    mean_y /= count;
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto &r : rows) {
        const double dx = static_cast<double>(r.dim) - mean_x;
        sxx += dx * dx;
        sxy += dx * (r.avg_iterations - mean_y);
    }
    if (sxx == 0.0) {
        throw InvalidInput("fit_iteration_slope needs at least two distinct dimensions");
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    return fit;
}

std::string format_decimal(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) {
        throw InternalError("format_decimal: conversion failed");
    }
    std::string s(buf, ptr);
    if (s.find_first_of(".eEn") == std::string::npos) {
        s += ".0";
    }
    return s;
}

void write_csv(std::ostream &out, const std::vector<BenchmarkRow> &rows) {
    out << kCsvHeader << '\n';
    for (const auto &r : rows) {
        out << r.dim << ',' << analytic::to_string(r.ansatz) << ',' << r.solved_count << ','
            << r.distinct_valid << ',' << r.distinct_invalid << ','
            << format_decimal(r.avg_iterations) << '\n';
    }
}

void emit_csv(const std::vector<BenchmarkRow> &rows, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidInput("cannot open " + path + " for writing");
    }
    write_csv(out, rows);
    out.flush();
    if (!out) {
        throw InvalidInput("failed writing " + path);
    }
}

std::vector<BenchmarkRow> read_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw InvalidInput("CSV header mismatch");
    }
    std::vector<BenchmarkRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 6) {
            throw InvalidInput("CSV row must have 6 fields: " + line);
        }
        BenchmarkRow r;
        r.dim = parse_size(fields[0], "dim");
        r.ansatz = analytic::parse_ansatz_kind(std::string(fields[1]));
        r.solved_count = parse_size(fields[2], "solved");
        r.distinct_valid = parse_size(fields[3], "valid");
        r.distinct_invalid = parse_size(fields[4], "invalid");
        r.avg_iterations = parse_double(fields[5]);
        rows.push_back(r);
    }
    return rows;
}

std::string to_json(const TrialRecord &record) {
    std::ostringstream system;
    gf2::write_system(system, {record.system.a, record.system.b});
    nlohmann::ordered_json j;
    j["dim"] = record.dim;
    j["trial"] = record.trial;
    j["trial_seed"] = record.trial_seed;
    j["system"] = system.str();
    j["planted_x"] = record.system.planted_x.to_string();
    j["report"] = nlohmann::ordered_json::parse(solver::to_json(record.report));
    return j.dump();
}

} // namespace mod2vqls::bench
