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

#include "detmit/pauli.h"

#include "detmit/errors.h"

namespace detmit {

namespace {

// Symplectic encoding: X = (1,0), Z = (0,1), Y = (1,1).
unsigned x_bit(Pauli p) { return p == Pauli::X || p == Pauli::Y; }
unsigned z_bit(Pauli p) { return p == Pauli::Z || p == Pauli::Y; }

Pauli from_bits(unsigned x, unsigned z) {
    if (x && z) return Pauli::Y;
    if (x) return Pauli::X;
    if (z) return Pauli::Z;
    return Pauli::I;
}

// Power of i in the single-qubit product a*b (XY = iZ, YZ = iX, ZX = iY).
unsigned product_phase(Pauli a, Pauli b) {
    if (a == Pauli::I || b == Pauli::I || a == b) {
        return 0;
    }
    int ia = static_cast<int>(a);
    int ib = static_cast<int>(b);
    return ((ib - ia + 3) % 3 == 1) ? 1u : 3u;
}

}  // namespace

char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

PauliString::PauliString(std::vector<Pauli> factors, double coefficient)
    : factors_(std::move(factors)), coefficient_(coefficient) {
    if (factors_.empty()) {
        throw InputError("Pauli string needs at least one qubit");
    }
}

PauliString PauliString::parse(std::string_view text) {
    double coefficient = 1;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        coefficient = text.front() == '-' ? -1 : 1;
        text.remove_prefix(1);
    }
    std::vector<Pauli> factors;
    factors.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'I': case 'i': case '_': factors.push_back(Pauli::I); break;
            case 'X': case 'x': factors.push_back(Pauli::X); break;
            case 'Y': case 'y': factors.push_back(Pauli::Y); break;
            case 'Z': case 'z': factors.push_back(Pauli::Z); break;
            default:
                throw InputError("Invalid Pauli character '" + std::string(1, c) + "' in '" + std::string(text) + "'");
        }
    }
    return PauliString(std::move(factors), coefficient);
}

PauliString PauliString::identity(std::size_t num_qubits) {
    return PauliString(std::vector<Pauli>(num_qubits, Pauli::I));
}

std::size_t PauliString::support_size() const {
    std::size_t count = 0;
    for (Pauli p : factors_) {
        count += p != Pauli::I;
    }
    return count;
}

Outcome PauliString::support_mask() const {
    if (factors_.size() > kMaxOutcomeQubits) {
        throw InputError("Pauli string too long for an outcome mask");
    }
    Outcome mask = 0;
    for (std::size_t k = 0; k < factors_.size(); k++) {
        if (factors_[k] != Pauli::I) {
            mask |= Outcome{1} << k;
        }
    }
    return mask;
}

PauliString PauliString::scaled(double factor) const { return PauliString(factors_, coefficient_ * factor); }

bool PauliString::measurable_in(std::string_view setting) const {
    if (setting.size() != factors_.size()) {
        return false;
    }
    for (std::size_t k = 0; k < factors_.size(); k++) {
        if (factors_[k] != Pauli::I && pauli_char(factors_[k]) != setting[k]) {
            return false;
        }
    }
    return true;
}

double PauliString::diagonal_value(Outcome outcome) const {
    return (std::popcount(outcome & support_mask()) & 1) ? -coefficient_ : coefficient_;
}

std::string PauliString::str() const {
    std::string result;
    if (coefficient_ == -1) {
        result = "-";
    } else if (coefficient_ != 1) {
        result = std::to_string(coefficient_) + "*";
    }
    for (Pauli p : factors_) {
        result += pauli_char(p);
    }
    return result;
}

PauliProduct multiply(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw InputError("Cannot multiply Pauli strings of different lengths");
    }
    std::vector<Pauli> factors(a.num_qubits());
    unsigned phase = 0;
    for (std::size_t k = 0; k < factors.size(); k++) {
        Pauli pa = a.factor(k);
        Pauli pb = b.factor(k);
        phase += product_phase(pa, pb);
        factors[k] = from_bits(x_bit(pa) ^ x_bit(pb), z_bit(pa) ^ z_bit(pb));
    }
    return PauliProduct{PauliString(std::move(factors), a.coefficient() * b.coefficient()), phase % 4};
}

PauliString multiply_real(const PauliString &a, const PauliString &b) {
    PauliProduct p = multiply(a, b);
    if (p.phase_power % 2 == 1) {
        throw InputError("Product of " + a.str() + " and " + b.str() + " has an imaginary phase");
    }
    return p.phase_power == 2 ? p.value.scaled(-1) : p.value;
}

}  // namespace detmit
