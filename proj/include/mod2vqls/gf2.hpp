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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mod2vqls/random.hpp"

/// Linear algebra over the two-element field F2.
///
/// Bits are packed 64 to a word. All public indexing is 1-based so that
/// index arithmetic reads like the circuit conventions used elsewhere
/// (e.g. CNOT(j, n + i) for entry a_ij).
namespace mod2vqls::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

/// Largest column count accepted by enumerate_solutions (2^20 scan).
inline constexpr std::size_t kBruteForceLimit = 20;

class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t length);
    BitVector(std::initializer_list<int> bits);

    /// Parse a string of '0'/'1' characters; character 1 is bit 1.
    static BitVector from_string(std::string_view bits);

    /// Bit 1 is the most significant of the `length` low bits of `index`,
    /// matching the simulator's basis-state numbering.
    static BitVector from_index(std::uint64_t index, std::size_t length);

    [[nodiscard]] std::size_t size() const noexcept { return length_; }
    [[nodiscard]] bool empty() const noexcept { return length_ == 0; }

    [[nodiscard]] bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);

    [[nodiscard]] std::size_t count() const noexcept;
    [[nodiscard]] bool none() const noexcept { return count() == 0; }

    /// Inverse of from_index. Requires size() <= 64.
    [[nodiscard]] std::uint64_t to_index() const;
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] std::span<const Word> words() const noexcept { return words_; }

    BitVector &operator^=(const BitVector &other);
    friend BitVector operator^(BitVector lhs, const BitVector &rhs) {
        lhs ^= rhs;
        return lhs;
    }

    friend bool operator==(const BitVector &, const BitVector &) = default;
    /// Shorter vectors first, then lexicographic by bit 1, 2, ...
    friend std::strong_ordering operator<=>(const BitVector &lhs, const BitVector &rhs);

  private:
    std::size_t length_ = 0;
    std::vector<Word> words_;
};

/// Concatenation a ++ b.
BitVector concat(const BitVector &a, const BitVector &b);

/// Parity of the bitwise AND.
bool dot(const BitVector &a, const BitVector &b);

std::ostream &operator<<(std::ostream &os, const BitVector &v);

class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    BitMatrix(std::initializer_list<std::initializer_list<int>> rows);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    [[nodiscard]] bool get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, bool value);

    [[nodiscard]] const BitVector &row(std::size_t i) const;
    [[nodiscard]] BitVector column(std::size_t j) const;

    /// Number of entries equal to 1 (the gate count of the mat-vec circuit).
    [[nodiscard]] std::size_t nonzero_count() const noexcept;

    friend bool operator==(const BitMatrix &, const BitMatrix &) = default;

  private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

std::ostream &operator<<(std::ostream &os, const BitMatrix &a);

using SolutionSet = std::set<BitVector>;

/// (Ax)_i = XOR_j a_ij x_j.
BitVector mat_vec_mod2(const BitMatrix &a, const BitVector &x);

/// Rank over F2 by Gaussian elimination on packed rows.
std::size_t rank_mod2(const BitMatrix &a);

/// Every x with Ax = b, found by exhaustive scan. This is the verification
/// oracle used throughout and is deliberately independent of rank_mod2.
SolutionSet enumerate_solutions(const BitMatrix &a, const BitVector &b,
                                std::size_t limit = kBruteForceLimit);

struct LinearSystem {
    BitMatrix a;
    BitVector b;
};

struct PlantedSystem {
    BitMatrix a;
    BitVector b;
    BitVector planted_x;
};

/// Square n x n system with uniform independent entries and a uniform planted
/// solution; b = A * planted_x. Entries are drawn row-major, then x.
PlantedSystem random_consistent_system(std::size_t n, Rng &rng);

/// Uniform random m x n matrix (row-major draws).
BitMatrix random_matrix(std::size_t m, std::size_t n, Rng &rng);
BitVector random_vector(std::size_t n, Rng &rng);

/// Text format: "m n", then m rows of n space-separated bits, then one line
/// of m space-separated bits for b.
LinearSystem read_system(std::istream &in);
LinearSystem read_system_file(const std::string &path);
void write_system(std::ostream &out, const LinearSystem &system);

} // namespace mod2vqls::gf2
