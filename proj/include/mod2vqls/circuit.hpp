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
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mod2vqls/gate.hpp"

namespace mod2vqls::circuits {

/// Ordered gate list over a fixed number of qubits. Every gate added is
/// validated against the qubit count, so a Circuit is always well formed.
class Circuit {
  public:
    explicit Circuit(std::size_t num_qubits = 0) : num_qubits_(num_qubits) {}
    Circuit(std::size_t num_qubits, std::initializer_list<sim::Gate> gates);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t gate_count() const noexcept { return gates_.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }
    [[nodiscard]] std::span<const sim::Gate> gates() const noexcept { return gates_; }

    void add(const sim::Gate &gate);

    /// Append `other`, shifting its qubit indices by `offset`.
    void append(const Circuit &other, std::size_t offset = 0);

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    std::size_t num_qubits_;
    std::vector<sim::Gate> gates_;
};

/// One gate per line in the debug format of sim::to_string.
std::string to_text(const Circuit &circuit);
std::ostream &operator<<(std::ostream &os, const Circuit &circuit);

} // namespace mod2vqls::circuits
