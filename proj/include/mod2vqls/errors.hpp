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

#include <stdexcept>
#include <string>

namespace mod2vqls {

/// Raised when caller-supplied data violates an operation's preconditions
/// (dimension mismatch, bad qubit index, malformed text input, ...).
class InvalidInput : public std::invalid_argument {
  public:
    explicit InvalidInput(const std::string &what) : std::invalid_argument(what) {}
};

/// Raised when a request exceeds a fixed capacity such as the brute-force
/// enumeration limit or the simulator's qubit ceiling.
class CapacityError : public std::length_error {
  public:
    explicit CapacityError(const std::string &what) : std::length_error(what) {}
};

/// Raised on broken internal invariants, e.g. state norm drift.
class InternalError : public std::logic_error {
  public:
    explicit InternalError(const std::string &what) : std::logic_error(what) {}
};

} // namespace mod2vqls
