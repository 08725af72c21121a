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

#include "mod2vqls/gf2.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>

#include "mod2vqls/errors.hpp"

namespace mod2vqls::gf2 {

namespace {

constexpr std::size_t words_for(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

// Bit i (1-based) lives at position (i - 1) % 64 of word (i - 1) / 64.
constexpr std::size_t word_of(std::size_t i) { return (i - 1) / kWordBits; }
constexpr Word mask_of(std::size_t i) { return Word{1} << ((i - 1) % kWordBits); }

} // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
    std::size_t i = 1;
    for (int v : bits) {
        if (v != 0 && v != 1) {
            throw InvalidInput("BitVector entries must be 0 or 1");
        }
        set(i++, v == 1);
    }
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') {
            throw InvalidInput("bit string may only contain '0' and '1'");
        }
        v.set(i + 1, bits[i] == '1');
    }
    return v;
}

BitVector BitVector::from_index(std::uint64_t index, std::size_t length) {
    if (length > kWordBits) {
        throw CapacityError("from_index supports at most 64 bits");
    }
    BitVector v(length);
    for (std::size_t i = 1; i <= length; ++i) {
        v.set(i, ((index >> (length - i)) & 1U) != 0);
    }
    return v;
}

bool BitVector::get(std::size_t i) const {
    if (i == 0 || i > length_) {
        throw InvalidInput("bit index out of range");
    }
    return (words_[word_of(i)] & mask_of(i)) != 0;
}

void BitVector::set(std::size_t i, bool value) {
    if (i == 0 || i > length_) {
        throw InvalidInput("bit index out of range");
    }
    if (value) {
        words_[word_of(i)] |= mask_of(i);
    } else {
        words_[word_of(i)] &= ~mask_of(i);
    }
}

void BitVector::flip(std::size_t i) {
    if (i == 0 || i > length_) {
        throw InvalidInput("bit index out of range");
    }
    words_[word_of(i)] ^= mask_of(i);
}

std::size_t BitVector::count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
}

std::uint64_t BitVector::to_index() const {
    if (length_ > kWordBits) {
        throw CapacityError("to_index supports at most 64 bits");
    }
    std::uint64_t index = 0;
    for (std::size_t i = 1; i <= length_; ++i) {
        index = (index << 1U) | (get(i) ? 1U : 0U);
    }
    return index;
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 1; i <= length_; ++i) {
        if (get(i)) {
            s[i - 1] = '1';
        }
    }
    return s;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.length_ != length_) {
        throw InvalidInput("BitVector length mismatch in xor");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

std::strong_ordering operator<=>(const BitVector &lhs, const BitVector &rhs) {
    if (auto c = lhs.length_ <=> rhs.length_; c != 0) {
        return c;
    }
    for (std::size_t i = 1; i <= lhs.length_; ++i) {
        if (auto c = lhs.get(i) <=> rhs.get(i); c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

BitVector concat(const BitVector &a, const BitVector &b) {
    BitVector out(a.size() + b.size());
    for (std::size_t i = 1; i <= a.size(); ++i) {
        out.set(i, a.get(i));
    }
    for (std::size_t i = 1; i <= b.size(); ++i) {
        out.set(a.size() + i, b.get(i));
    }
    return out;
}

bool dot(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size()) {
        throw InvalidInput("BitVector length mismatch in dot");
    }
    Word acc = 0;
    auto wa = a.words();
    auto wb = b.words();
    for (std::size_t w = 0; w < wa.size(); ++w) {
        acc ^= wa[w] & wb[w];
    }
    return (std::popcount(acc) & 1) != 0;
}

std::ostream &operator<<(std::ostream &os, const BitVector &v) {
    return os << v.to_string();
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
    cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    rows_.reserve(rows.size());
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw InvalidInput("ragged BitMatrix initializer");
        }
        rows_.emplace_back(r);
    }
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix id(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
        id.set(i, i, true);
    }
    return id;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
    for (const auto &r : rows) {
        if (r.size() != cols) {
            throw InvalidInput("row length does not match column count");
        }
    }
    BitMatrix a;
    a.cols_ = cols;
    a.rows_ = std::move(rows);
    return a;
}

bool BitMatrix::get(std::size_t i, std::size_t j) const { return row(i).get(j); }

void BitMatrix::set(std::size_t i, std::size_t j, bool value) {
    if (i == 0 || i > rows_.size()) {
        throw InvalidInput("row index out of range");
    }
    rows_[i - 1].set(j, value);
}

const BitVector &BitMatrix::row(std::size_t i) const {
    if (i == 0 || i > rows_.size()) {
        throw InvalidInput("row index out of range");
    }
    return rows_[i - 1];
}

BitVector BitMatrix::column(std::size_t j) const {
    if (j == 0 || j > cols_) {
        throw InvalidInput("column index out of range");
    }
    BitVector c(rows_.size());
    for (std::size_t i = 1; i <= rows_.size(); ++i) {
        c.set(i, rows_[i - 1].get(j));
    }
    return c;
}

std::size_t BitMatrix::nonzero_count() const noexcept {
    std::size_t c = 0;
    for (const auto &r : rows_) {
        c += r.count();
    }
    return c;
}

std::ostream &operator<<(std::ostream &os, const BitMatrix &a) {
    for (std::size_t i = 1; i <= a.rows(); ++i) {
        os << a.row(i) << '\n';
    }
    return os;
}

BitVector mat_vec_mod2(const BitMatrix &a, const BitVector &x) {
    if (x.size() != a.cols()) {
        throw InvalidInput("mat_vec_mod2: x has length " + std::to_string(x.size()) +
                           " but A has " + std::to_string(a.cols()) + " columns");
    }
    BitVector out(a.rows());
    for (std::size_t i = 1; i <= a.rows(); ++i) {
        out.set(i, dot(a.row(i), x));
    }
    return out;
}

std::size_t rank_mod2(const BitMatrix &a) {
    const std::size_t nwords = words_for(a.cols());
    std::vector<std::vector<Word>> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 1; i <= a.rows(); ++i) {
        auto w = a.row(i).words();
        rows.emplace_back(w.begin(), w.end());
    }

    std::size_t rank = 0;
    for (std::size_t w = 0; w < nwords && rank < rows.size(); ++w) {
        for (std::size_t bit = 0; bit < kWordBits && rank < rows.size(); ++bit) {
            const Word m = Word{1} << bit;
            auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                                      [&](const auto &r) { return (r[w] & m) != 0; });
            if (pivot == rows.end()) {
                continue;
            }
            std::swap(*pivot, rows[rank]);
            for (std::size_t r = rank + 1; r < rows.size(); ++r) {
                if ((rows[r][w] & m) != 0) {
                    for (std::size_t k = w; k < nwords; ++k) {
                        rows[r][k] ^= rows[rank][k];
                    }
                }
            }
            ++rank;
        }
    }
    return rank;
}

SolutionSet enumerate_solutions(const BitMatrix &a, const BitVector &b, std::size_t limit) {
    if (b.size() != a.rows()) {
        throw InvalidInput("enumerate_solutions: b length does not match row count");
    }
    const std::size_t n = a.cols();
    if (n > limit || n > kBruteForceLimit) {
        throw CapacityError("enumerate_solutions: " + std::to_string(n) +
                            " columns exceeds brute-force limit " +
                            std::to_string(std::min(limit, kBruteForceLimit)));
    }

    std::vector<BitVector> columns;
    columns.reserve(n);
    for (std::size_t j = 1; j <= n; ++j) {
        columns.push_back(a.column(j));
    }

    // Gray-code walk: consecutive x differ in one bit, so Ax changes by one
    // column per step.
    SolutionSet solutions;
    BitVector image(a.rows());
    std::uint64_t gray = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 0; k < total; ++k) {
        if (k > 0) {
            const auto changed = static_cast<std::size_t>(std::countr_zero(k));
            gray ^= std::uint64_t{1} << changed;
            // Bit position p of the index is variable n - p.
            image ^= columns[n - 1 - changed];
        }
        if (image == b) {
            solutions.insert(BitVector::from_index(gray, n));
        }
    }
    return solutions;
}

BitMatrix random_matrix(std::size_t m, std::size_t n, Rng &rng) {
    BitMatrix a(m, n);
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            a.set(i, j, random_bit(rng));
        }
    }
    return a;
}

BitVector random_vector(std::size_t n, Rng &rng) {
    BitVector v(n);
    for (std::size_t j = 1; j <= n; ++j) {
        v.set(j, random_bit(rng));
    }
    return v;
}

PlantedSystem random_consistent_system(std::size_t n, Rng &rng) {
    if (n == 0) {
        throw InvalidInput("random_consistent_system requires n >= 1");
    }
    PlantedSystem sys;
    sys.a = random_matrix(n, n, rng);
    sys.planted_x = random_vector(n, rng);
    sys.b = mat_vec_mod2(sys.a, sys.planted_x);
    return sys;
}

namespace {

bool read_bit(std::istream &in, const char *what) {
    int v = -1;
    if (!(in >> v)) {
        throw InvalidInput(std::string("system file: unexpected end of input reading ") + what);
    }
    if (v != 0 && v != 1) {
        throw InvalidInput(std::string("system file: non-binary entry in ") + what);
    }
    return v == 1;
}

} // namespace

LinearSystem read_system(std::istream &in) {
    long long m = -1;
    long long n = -1;
    if (!(in >> m >> n) || m < 0 || n < 0) {
        throw InvalidInput("system file: first line must be \"m n\"");
    }
    LinearSystem sys{BitMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n)),
                     BitVector(static_cast<std::size_t>(m))};
    for (std::size_t i = 1; i <= sys.a.rows(); ++i) {
        for (std::size_t j = 1; j <= sys.a.cols(); ++j) {
            sys.a.set(i, j, read_bit(in, "matrix"));
        }
    }
    for (std::size_t i = 1; i <= sys.b.size(); ++i) {
        sys.b.set(i, read_bit(in, "right-hand side"));
    }
    std::string extra;
    if (in >> extra) {
        throw InvalidInput("system file: trailing data after right-hand side");
    }
    return sys;
}

LinearSystem read_system_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open system file: " + path);
    }
    return read_system(in);
}

void write_system(std::ostream &out, const LinearSystem &system) {
    if (system.b.size() != system.a.rows()) {
        throw InvalidInput("write_system: b length does not match row count");
    }
    out << system.a.rows() << ' ' << system.a.cols() << '\n';
    for (std::size_t i = 1; i <= system.a.rows(); ++i) {
        for (std::size_t j = 1; j <= system.a.cols(); ++j) {
            out << (j > 1 ? " " : "") << (system.a.get(i, j) ? 1 : 0);
        }
        out << '\n';
    }
    for (std::size_t i = 1; i <= system.b.size(); ++i) {
        out << (i > 1 ? " " : "") << (system.b.get(i) ? 1 : 0);
    }
    out << '\n';
}

} // namespace mod2vqls::gf2
