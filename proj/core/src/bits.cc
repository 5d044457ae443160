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

#include "detmit/bits.h"

#include "detmit/errors.h"

namespace detmit {

Outcome parse_bitstring(std::string_view text, std::size_t num_qubits) {
    if (num_qubits > kMaxOutcomeQubits) {
        throw InputError("Too many qubits for an outcome index: " + std::to_string(num_qubits));
    }
    if (text.size() != num_qubits) {
        throw InputError("Bitstring '" + std::string(text) + "' has length " + std::to_string(text.size()) +
                         " but expected " + std::to_string(num_qubits));
    }
    Outcome result = 0;
    for (std::size_t k = 0; k < text.size(); k++) {
        if (text[k] == '1') {
            result |= Outcome{1} << k;
        } else if (text[k] != '0') {
            throw InputError("Bitstring '" + std::string(text) + "' contains a character other than 0 or 1");
        }
    }
    return result;
}

std::string format_bitstring(Outcome outcome, std::size_t num_qubits) {
    std::string result(num_qubits, '0');
    for (std::size_t k = 0; k < num_qubits; k++) {
        if (outcome_bit(outcome, k)) {
            result[k] = '1';
        }
    }
    return result;
}

}  // namespace detmit
