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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "mod2vqls/analytic.hpp"
#include "mod2vqls/circuits.hpp"
#include "mod2vqls/errors.hpp"
#include "mod2vqls/state_vector.hpp"
#include "oracles.hpp"

using namespace mod2vqls;
using Catch::Matchers::WithinAbs;
using circuits::Circuit;
using gf2::BitMatrix;
using gf2::BitVector;
using sim::Gate;

namespace {

constexpr double kPi = std::numbers::pi;
const BitMatrix kExample{{1, 0, 1}, {1, 1, 0}};

std::vector<double> random_angles(std::size_t n, Rng &rng) {
    std::vector<double> v(n);
    for (auto &t : v) {
        t = uniform_real(rng, -2 * kPi, 2 * kPi);
    }
    return v;
}

// Bricks listed layer by layer from the offset rule alone.
std::vector<std::pair<std::size_t, std::size_t>> expected_bricks(std::size_t n, std::size_t layers) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t l = 1; l <= layers; ++l) {
        for (std::size_t a = (l % 2 == 1 ? 1 : 2); a + 1 <= n; a += 2) {
            out.emplace_back(a, a + 1);
        }
    }
    return out;
}

} // namespace

TEST_CASE("Circuit validates gates", "[circuits]") {
    Circuit c(2);
    c.add(Gate::cnot(1, 2));
    CHECK(c.gate_count() == 1);
    CHECK_THROWS_AS(c.add(Gate::x(3)), InvalidInput);
    CHECK_THROWS_AS(c.add(Gate::cz(2, 2)), InvalidInput);
    CHECK_THROWS_AS(Circuit(1, {Gate::cnot(1, 2)}), InvalidInput);

    Circuit big(4);
    big.append(c, 2);
    CHECK(big.gates()[0] == Gate::cnot(3, 4));
    CHECK_THROWS_AS(big.append(c, 3), InvalidInput);
}

TEST_CASE("matvec operator on the worked example", "[circuits]") {
    const auto op = circuits::build_matvec_operator(kExample);
    CHECK(op.num_qubits() == 5);
    const Circuit expected(5, {Gate::cnot(1, 4), Gate::cnot(1, 5), Gate::cnot(2, 5), Gate::cnot(3, 4)});
    CHECK(op == expected);
    CHECK(circuits::to_text(op) == "CNOT 1 4\nCNOT 1 5\nCNOT 2 5\nCNOT 3 4\n");
    std::ostringstream os;
    os << op;
    CHECK(os.str() == circuits::to_text(op));
}

TEST_CASE("matvec operator of the zero matrix is empty", "[circuits]") {
    const auto op = circuits::build_matvec_operator(BitMatrix(3, 2));
    CHECK(op.empty());
    CHECK(op.num_qubits() == 5);
}

TEST_CASE("matvec operator computes Ax on every input", "[circuits]") {
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        const auto a = gf2::random_matrix(4, 4, rng);
        const auto op = circuits::build_matvec_operator(a);
        REQUIRE(op.gate_count() == a.nonzero_count());
        for (std::uint64_t k = 0; k < 16; ++k) {
            const auto x = BitVector::from_index(k, 4);
            const auto out = sim::run_circuit(sim::basis_state(gf2::concat(x, BitVector(4))), op);
            REQUIRE(out.amplitude(gf2::concat(x, oracle::matvec(a, x))) == sim::Complex(1.0));
        }
    }
}

TEST_CASE("CNOT order inside the operator does not matter", "[circuits]") {
    Rng rng(32);
    for (int t = 0; t < 30; ++t) {
        const std::size_t m = 1 + rng() % 4;
        const std::size_t n = 1 + rng() % (8 - m);
        const auto a = gf2::random_matrix(m, n, rng);
        const auto op = circuits::build_matvec_operator(a);
        std::vector<Gate> gates(op.gates().begin(), op.gates().end());
        std::shuffle(gates.begin(), gates.end(), rng);
        Circuit shuffled(op.num_qubits());
        for (const auto &g : gates) {
            shuffled.add(g);
        }
        REQUIRE((oracle::circuit_unitary(op) - oracle::circuit_unitary(shuffled)).norm() < 1e-12);
    }
}

TEST_CASE("state preparation", "[circuits]") {
    CHECK(circuits::build_state_prep(BitVector{0, 0, 0}, 3).empty());
    const auto c = circuits::build_state_prep(BitVector{1, 0, 1}, 5);
    CHECK(c == Circuit(5, {Gate::x(1), Gate::x(3)}));
    const auto s = sim::run_circuit(sim::StateVector(5), c);
    CHECK(s.amplitude(BitVector{1, 0, 1, 0, 0}) == sim::Complex(1.0));
    CHECK_THROWS_AS(circuits::build_state_prep(BitVector{1, 0, 1}, 2), InvalidInput);
}

TEST_CASE("rotations ansatz", "[circuits]") {
    const std::vector<double> zeros(3, 0.0);
    const auto id = sim::run_circuit(sim::StateVector(3), circuits::build_rotations_ansatz(zeros));
    CHECK(id.amplitude(0) == sim::Complex(1.0));

    const std::vector<double> pis(3, kPi);
    const auto flip = sim::run_circuit(sim::StateVector(3), circuits::build_rotations_ansatz(pis));
    CHECK_THAT(flip.amplitude(7).real(), WithinAbs(1.0, 1e-15));

    Rng rng(33);
    for (int t = 0; t < 20; ++t) {
        const auto theta = random_angles(3, rng);
        const auto c = circuits::build_rotations_ansatz(theta);
        REQUIRE(c.gate_count() == 3);
        const auto psi = sim::run_circuit(sim::StateVector(3), c);
        for (std::uint64_t k = 0; k < 8; ++k) {
            const auto expect = analytic::alpha(BitVector::from_index(k, 3), theta);
            REQUIRE(std::abs(psi.amplitude(k) - sim::Complex(expect)) < 1e-12);
        }
    }
}

TEST_CASE("brickwork layout", "[circuits]") {
    const std::vector<double> p2{0.1, 0.2};
    CHECK(circuits::build_brickwork_ansatz(2, 1, p2) ==
          Circuit(2, {Gate::ry(1, 0.1), Gate::ry(2, 0.2), Gate::cz(1, 2)}));

    CHECK(circuits::brickwork_parameter_count(4, 2) == 6);
    const std::vector<double> p6{1, 2, 3, 4, 5, 6};
    CHECK(circuits::build_brickwork_ansatz(4, 2, p6) ==
          Circuit(4, {Gate::ry(1, 1), Gate::ry(2, 2), Gate::cz(1, 2), Gate::ry(3, 3), Gate::ry(4, 4),
                      Gate::cz(3, 4), Gate::ry(2, 5), Gate::ry(3, 6), Gate::cz(2, 3)}));

    for (std::size_t layers : {0, 1, 4}) {
        CHECK(circuits::brickwork_parameter_count(1, layers) == 0);
        CHECK(circuits::build_brickwork_ansatz(1, layers, {}).empty());
    }
    CHECK_THROWS_AS(circuits::build_brickwork_ansatz(4, 2, p2), InvalidInput);
}

TEST_CASE("brickwork counts follow the offset rule", "[circuits]") {
    for (std::size_t n = 0; n <= 9; ++n) {
        for (std::size_t layers = 0; layers <= 9; ++layers) {
            const auto bricks = expected_bricks(n, layers);
            REQUIRE(circuits::brickwork_brick_count(n, layers) == bricks.size());
            REQUIRE(circuits::brickwork_parameter_count(n, layers) == 2 * bricks.size());
            const std::vector<double> params(2 * bricks.size(), 0.5);
            const auto c = circuits::build_brickwork_ansatz(n, layers, params);
            REQUIRE(c.gate_count() == 3 * bricks.size());
            for (std::size_t k = 0; k < bricks.size(); ++k) {
                REQUIRE(c.gates()[3 * k + 2] == Gate::cz(bricks[k].first, bricks[k].second));
            }
        }
    }
}

TEST_CASE("full variational circuit", "[circuits]") {
    const auto just_op = circuits::build_full_variational_circuit(kExample, Circuit(3));
    CHECK(just_op == circuits::build_matvec_operator(kExample));

    const auto brick = circuits::build_brickwork_ansatz(3, 2, std::vector<double>(4, 0.3));
    CHECK(circuits::build_full_variational_circuit(kExample, brick).gate_count() ==
          brick.gate_count() + 4);

    CHECK_THROWS_AS(circuits::build_full_variational_circuit(kExample, Circuit(2)), InvalidInput);
}

TEST_CASE("optimal rotation angles put all weight on b", "[circuits]") {
    Rng rng(34);
    for (int t = 0; t < 20; ++t) {
        const auto sys = gf2::random_consistent_system(1 + t % 5, rng);
        const std::size_t n = sys.a.cols();
        std::vector<double> theta(n);
        for (std::size_t j = 1; j <= n; ++j) {
            theta[j - 1] = sys.planted_x.get(j) ? kPi : 0.0;
        }
        const auto c = circuits::build_full_variational_circuit(
            sys.a, circuits::build_rotations_ansatz(theta));
        const auto psi = sim::run_circuit(sim::StateVector(c.num_qubits()), c);
        std::vector<std::size_t> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = n + 1 + i;
        }
        REQUIRE_THAT(sim::marginal_probability(psi, out, sys.b), WithinAbs(1.0, 1e-10));
    }
}

TEST_CASE("adder demo gate list", "[circuits]") {
    CHECK(circuits::build_adder_demo(0.25, 0.5) ==
          Circuit(3, {Gate::ry(1, 0.5), Gate::ry(2, 1.0), Gate::cnot(1, 3), Gate::cnot(2, 3)}));
    CHECK(circuits::to_text(circuits::build_adder_demo(0.25, 0.5)) ==
          "RY 1 0.500000\nRY 2 1.000000\nCNOT 1 3\nCNOT 2 3\n");
}
