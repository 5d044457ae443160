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

#ifndef DETMIT_PAULI_H
#define DETMIT_PAULI_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "detmit/bits.h"

namespace detmit {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// Real-coefficient tensor product of single-qubit Paulis.
class PauliString {
   public:
    explicit PauliString(std::vector<Pauli> factors, double coefficient = 1.0);

    /// Parses e.g. "XZIIZ" (qubit 0 leftmost), optionally prefixed by '+' or '-'.
    static PauliString parse(std::string_view text);
    static PauliString identity(std::size_t num_qubits);

    std::size_t num_qubits() const { return factors_.size(); }
    Pauli factor(std::size_t qubit) const { return factors_[qubit]; }
    const std::vector<Pauli> &factors() const { return factors_; }
    double coefficient() const { return coefficient_; }

    /// Number of non-identity factors.
    std::size_t support_size() const;
    /// Bit k set iff factor k is not the identity. Requires n <= 63.
    Outcome support_mask() const;

    PauliString scaled(double factor) const;

    /// True if every non-identity factor matches the setting's basis letter.
    bool measurable_in(std::string_view setting) const;

    /// Eigenvalue on a measured outcome in a compatible basis, times the
    /// coefficient: coefficient * prod_{k in support} (-1)^bit_k.
    double diagonal_value(Outcome outcome) const;

    std::string str() const;

    bool operator==(const PauliString &) const = default;

   private:
    std::vector<Pauli> factors_;
    double coefficient_;
};

/// Product a*b. The phase i^k produced by the single-qubit products is
/// returned separately as k in {0, 1, 2, 3}; the coefficient is the product
/// of the input coefficients.
struct PauliProduct {
    PauliString value;
    unsigned phase_power;
};
PauliProduct multiply(const PauliString &a, const PauliString &b);

/// a*b with a real phase folded into the coefficient. Throws InputError if
/// the operands anticommute (phase would be imaginary).
PauliString multiply_real(const PauliString &a, const PauliString &b);

}  // namespace detmit

#endif
