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

// Acceptance suite. Each criterion prints one PASS/FAIL line with the
// measured quantity next to its threshold; the exit status is non-zero if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "mod2vqls/analytic.hpp"
#include "mod2vqls/bench.hpp"
#include "mod2vqls/circuits.hpp"
#include "mod2vqls/gf2.hpp"
#include "mod2vqls/solver.hpp"
#include "mod2vqls/state_vector.hpp"
#include "oracles.hpp"

using namespace mod2vqls;
using gf2::BitMatrix;
using gf2::BitVector;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kBenchSeed = 0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::vector<std::size_t> output_register(std::size_t n, std::size_t m) {
    std::vector<std::size_t> reg(m);
    for (std::size_t i = 0; i < m; ++i) {
        reg[i] = n + 1 + i;
    }
    return reg;
}

std::vector<double> random_angles(std::size_t n, Rng &rng) {
    std::vector<double> v(n);
    for (auto &t : v) {
        t = uniform_real(rng, -2 * kPi, 2 * kPi);
    }
    return v;
}

Outcome circuit_correctness() {
    Rng rng(101);
    double worst = 0.0;
    std::size_t inputs = 0;
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng() % 11;
        const std::size_t m = 1 + rng() % (12 - n);
        const auto a = gf2::random_matrix(m, n, rng);
        const auto op = circuits::build_matvec_operator(a);
        std::vector<std::uint64_t> xs;
        if (n <= 6) {
            for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
                xs.push_back(k);
            }
        } else {
            for (int s = 0; s < 64; ++s) {
                xs.push_back(rng() >> (64 - n));
            }
        }
        for (auto k : xs) {
            const auto x = BitVector::from_index(k, n);
            const auto out = sim::run_circuit(sim::basis_state(gf2::concat(x, BitVector(m))), op);
            const auto amp = out.amplitude(gf2::concat(x, oracle::matvec(a, x)));
            worst = std::max(worst, std::abs(std::abs(amp) - 1.0));
            ++inputs;
        }
    }
    return {worst <= 1e-12,
            "50 matrices, " + std::to_string(inputs) + " inputs, max | |amp| - 1 | = " +
                fmt("%.3g", worst) + " (tol 1e-12)"};
}

Outcome worked_example() {
    const BitMatrix a{{1, 0, 1}, {1, 1, 0}};
    const circuits::Circuit expected(5, {sim::Gate::cnot(1, 4), sim::Gate::cnot(1, 5),
                                         sim::Gate::cnot(2, 5), sim::Gate::cnot(3, 4)});
    const bool exact = circuits::build_matvec_operator(a) == expected;
    Rng rng(102);
    std::size_t mismatches = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto mat = gf2::random_matrix(1 + rng() % 12, 1 + rng() % 12, rng);
        std::size_t ones = 0;
        for (std::size_t i = 1; i <= mat.rows(); ++i) {
            for (std::size_t j = 1; j <= mat.cols(); ++j) {
                ones += mat.get(i, j) ? 1 : 0;
            }
        }
        mismatches += circuits::build_matvec_operator(mat).gate_count() == ones ? 0 : 1;
    }
    return {exact && mismatches == 0,
            std::string("example gates ") + (exact ? "exact" : "WRONG") +
                ", gate-count mismatches " + std::to_string(mismatches) + "/1000"};
}

Outcome adder() {
    double worst = 0.0;
    const std::vector<std::size_t> target{3};
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double th = 2 * kPi * i / 20.0;
            const double ph = 2 * kPi * j / 20.0;
            const auto psi = sim::run_circuit(sim::StateVector(3), circuits::build_adder_demo(th, ph));
            const double p = sim::marginal_probability(psi, target, BitVector{1});
            const double s = std::sin(th), c = std::cos(th), sp = std::sin(ph), cp = std::cos(ph);
            worst = std::max(worst, std::abs(p - (s * s * cp * cp + c * c * sp * sp)));
        }
    }
    return {worst <= 1e-10, "20x20 grid, max error " + fmt("%.3g", worst) + " (tol 1e-10)"};
}

Outcome cost_agreement() {
    Rng rng(104);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 4;
        const std::size_t m = 1 + rng() % 4;
        const auto a = gf2::random_matrix(m, n, rng);
        const auto b = t % 2 == 0 ? gf2::mat_vec_mod2(a, gf2::random_vector(n, rng))
                                  : gf2::random_vector(m, rng);
        const auto theta = random_angles(n, rng);
        const auto psi = solver::variational_state(a, {theta, analytic::AnsatzKind::Rotations, 0});
        const double sim_cost = 1.0 - sim::marginal_probability(psi, output_register(n, m), b);
        worst = std::max(worst, std::abs(analytic::analytic_cost(a, b, theta) - sim_cost));
    }
    return {worst <= 1e-10, "200 draws, max |analytic - simulated| = " + fmt("%.3g", worst) +
                                " (tol 1e-10)"};
}

Outcome gradient_check() {
    Rng rng(105);
    constexpr double h = 1e-5;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng() % 4;
        const std::size_t m = 1 + rng() % 4;
        const auto a = gf2::random_matrix(m, n, rng);
        const auto b = gf2::mat_vec_mod2(a, gf2::random_vector(n, rng));
        const auto theta = random_angles(n, rng);
        const auto grad = analytic::analytic_gradient(a, b, theta);
        for (std::size_t j = 0; j < n; ++j) {
            auto up = theta;
            auto down = theta;
            up[j] += h;
            down[j] -= h;
            const auto cost = [&](const std::vector<double> &th) {
                return solver::simulated_cost(a, b, {th, analytic::AnsatzKind::Rotations, 0});
            };
            worst = std::max(worst, std::abs(grad[j] - (cost(up) - cost(down)) / (2 * h)));
        }
    }
    return {worst <= 1e-6,
            "100 points, max |grad - central difference| = " + fmt("%.3g", worst) + " (tol 1e-6)"};
}

Outcome optimal_parameters() {
    Rng rng(106);
    double worst_corner = 0.0;
    double worst_plateau = 0.0;
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 5);
        const auto sys = gf2::random_consistent_system(n, rng);
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
            const auto x = BitVector::from_index(k, n);
            std::vector<double> theta(n);
            for (std::size_t j = 1; j <= n; ++j) {
                theta[j - 1] = x.get(j) ? kPi : 0.0;
            }
            const double expect = oracle::matvec(sys.a, x) == sys.b ? 0.0 : 1.0;
            worst_corner =
                std::max(worst_corner, std::abs(analytic::analytic_cost(sys.a, sys.b, theta) - expect));
        }
        const double plateau = 1.0 - std::ldexp(1.0, -static_cast<int>(oracle::rank_by_row_span(sys.a)));
        for (int k : {1, 3, 5, 7}) {
            const std::vector<double> theta(n, k * kPi / 2);
            worst_plateau =
                std::max(worst_plateau, std::abs(analytic::analytic_cost(sys.a, sys.b, theta) - plateau));
        }
    }
    return {worst_corner <= 1e-12 && worst_plateau <= 1e-12,
            "20 systems, corner error " + fmt("%.3g", worst_corner) + ", plateau error " +
                fmt("%.3g", worst_plateau) + " (tol 1e-12)"};
}

Outcome q_identities() {
    Rng rng(107);
    double worst = 0.0;
    auto track = [&](std::complex<double> lhs, std::complex<double> rhs) {
        worst = std::max(worst, std::abs(lhs - rhs));
    };
    for (long n = 1; n <= 8; ++n) {
        const auto z = analytic::xi(static_cast<std::size_t>(n));
        const auto qn = analytic::q_integer(n, z);
        track(analytic::q_integer(3 * n, z), qn);
        track(qn, analytic::q_integer(2 * n, z) / std::sqrt(2.0));
        for (long k = -3; k <= 3; ++k) {
            track(analytic::q_integer(4 * k * n, z), 0.0);
        }
        // [kn] = (-1)^m [rn] for odd k = 4m + r.
        for (long k = 1; k <= 15; k += 2) {
            const long m = k / 4;
            const long r = k % 4;
            track(analytic::q_integer(k * n, z), (m % 2 == 0 ? 1.0 : -1.0) * analytic::q_integer(r * n, z));
        }
        track(analytic::q_integer(5 * n, z), -analytic::q_integer(3 * n, z));
        for (int t = 0; t < 50; ++t) {
            const long s = static_cast<long>(rng() % 11);
            const long u = static_cast<long>(rng() % 11);
            const auto q = std::polar(1.0, uniform_real(rng, 0.05, kPi - 0.05));
            track(analytic::q_integer(s + u, q),
                  std::pow(q, s) * analytic::q_integer(u, q) + std::pow(q, -u) * analytic::q_integer(s, q));
        }
        for (std::size_t p = 0; p < 4 * static_cast<std::size_t>(n); ++p) {
            const double half = kPi * static_cast<double>(p) / (4.0 * static_cast<double>(n));
            const auto nn = static_cast<std::size_t>(n);
            track(analytic::q_integer_amplitude(false, p, nn), std::cos(half));
            track(analytic::q_integer_amplitude(true, p, nn), std::sin(half));
        }
    }
    return {worst <= 1e-12, "n = 1..8, max identity residual " + fmt("%.3g", worst) + " (tol 1e-12)"};
}

bench::BenchmarkOptions rotations_run() {
    bench::BenchmarkOptions opts;
    opts.dims = {1, 9};
    opts.trials = 10;
    opts.ansatz = analytic::AnsatzKind::Rotations;
    opts.seed = kBenchSeed;
    return opts;
}

std::string rows_text(const std::vector<bench::BenchmarkRow> &rows) {
    std::ostringstream os;
    bench::write_csv(os, rows);
    return os.str();
}

Outcome rotations_table(std::vector<bench::BenchmarkRow> &rows_out) {
    const auto t0 = std::chrono::steady_clock::now();
    rows_out = bench::run_benchmark(rotations_run());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool all = true;
    for (const auto &r : rows_out) {
        all = all && r.solved_count == 10 && r.distinct_invalid == 0;
    }
    const auto fit = bench::fit_iteration_slope(rows_out);
    const double dim9 = rows_out.back().avg_iterations;
    const bool pass = all && dim9 <= 100.0 && fit.slope >= 2.0 && fit.slope <= 6.0 && secs < 600.0;
    std::printf("%s", rows_text(rows_out).c_str());
    return {pass, std::string(all ? "all 10/10 solved, 0 invalid" : "solved/invalid check FAILED") +
                      ", dim-9 avg " + fmt("%.1f", dim9) + " (<= 100), slope " + fmt("%.3f", fit.slope) +
                      " (in [2, 6]), " + fmt("%.1f", secs) + " s"};
}

Outcome brickwork_table() {
    bench::BenchmarkOptions opts;
    opts.dims = {1, 5};
    opts.trials = 10;
    opts.ansatz = analytic::AnsatzKind::Brickwork;
    opts.seed = kBenchSeed;
    std::size_t unsound = 0;
    const auto rows = bench::run_benchmark(opts, [&](const bench::TrialRecord &r) {
        for (const auto &x : r.report.valid_solutions) {
            unsound += oracle::matvec(r.system.a, x) == r.system.b ? 0 : 1;
        }
    });
    std::printf("%s", rows_text(rows).c_str());
    std::size_t worst = 10;
    for (const auto &r : rows) {
        worst = std::min(worst, r.solved_count);
    }
    return {worst >= 7 && unsound == 0, "min solved " + std::to_string(worst) +
                                            "/10 (>= 7), oracle-rejected valid solutions " +
                                            std::to_string(unsound)};
}

Outcome determinism(const std::vector<bench::BenchmarkRow> &first) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = dir / "mod2vqls_acceptance_a.csv";
    const auto b = dir / "mod2vqls_acceptance_b.csv";
    bench::emit_csv(first, a.string());
    bench::emit_csv(bench::run_benchmark(rotations_run()), b.string());
    auto slurp = [](const std::filesystem::path &p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    const auto ta = slurp(a);
    const auto tb = slurp(b);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    return {!ta.empty() && ta == tb,
            "rerun CSV " + std::string(ta == tb ? "byte-identical" : "DIFFERS") + " (" +
                std::to_string(ta.size()) + " bytes)"};
}

} // namespace

int main() {
    int failures = 0;
    auto report = [&](int id, const char *name, const Outcome &o) {
        std::printf("[%s] criterion %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    };
    auto guarded = [&](const std::function<Outcome()> &f) {
        try {
            return f();
        } catch (const std::exception &e) {
            return Outcome{false, std::string("exception: ") + e.what()};
        }
    };

    report(1, "circuit correctness", guarded(circuit_correctness));
    report(2, "worked example and gate count", guarded(worked_example));
    report(3, "adder probability", guarded(adder));
    report(4, "analytic vs simulated cost", guarded(cost_agreement));
    report(5, "gradient vs finite differences", guarded(gradient_check));
    report(6, "optimal-parameter values", guarded(optimal_parameters));
    report(7, "q-integer identities", guarded(q_identities));
    std::vector<bench::BenchmarkRow> rotations;
    report(8, "rotations benchmark band", guarded([&] { return rotations_table(rotations); }));
    report(9, "brickwork benchmark band", guarded(brickwork_table));
    report(10, "benchmark determinism", guarded([&] { return determinism(rotations); }));

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
