// Copyright 2026 The detmit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DETMIT_BITS_H
#define DETMIT_BITS_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace detmit {

/// Index of a measurement outcome over n qubits. Qubit k is bit k, so qubit 0
/// is the least-significant bit. Bitstrings are written qubit-0 leftmost.
using Outcome = std::uint64_t;

/// Largest qubit count representable by an Outcome.
inline constexpr std::size_t kMaxOutcomeQubits = 63;

inline constexpr unsigned outcome_bit(Outcome outcome, std::size_t qubit) {
    return static_cast<unsigned>((outcome >> qubit) & 1u);
}

inline constexpr std::size_t hamming_weight(Outcome outcome) {
    return static_cast<std::size_t>(std::popcount(outcome));
}

inline constexpr std::uint64_t outcome_count(std::size_t num_qubits) {
    return std::uint64_t{1} << num_qubits;
}

/// Parses a '0'/'1' string of length num_qubits (qubit 0 leftmost).
/// Throws InputError on bad characters or length.
Outcome parse_bitstring(std::string_view text, std::size_t num_qubits);

std::string format_bitstring(Outcome outcome, std::size_t num_qubits);

}  // namespace detmit

#endif
