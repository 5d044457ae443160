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

#include "detmit/detector_model.h"

#include <cmath>
#include <string>

#include "detmit/errors.h"

namespace detmit {

namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

std::vector<Matrix2> forward_factors(const DetectorModel &model) {
    std::vector<Matrix2> factors;
    factors.reserve(model.num_qubits());
    for (std::size_t k = 0; k < model.num_qubits(); k++) {
        factors.push_back(single_qubit_matrix(model, k));
    }
    return factors;
}

std::vector<Matrix2> inverse_factors(const DetectorModel &model) {
    std::vector<Matrix2> factors;
    factors.reserve(model.num_qubits());
    for (std::size_t k = 0; k < model.num_qubits(); k++) {
        factors.push_back(single_qubit_inverse(model, k));
    }
    return factors;
}

void check_dimension(const DetectorModel &model, std::size_t size) {
    if (model.num_qubits() > kMaxOutcomeQubits || size != outcome_count(model.num_qubits())) {
        throw InputError("Vector of length " + std::to_string(size) + " does not match a " +
                         std::to_string(model.num_qubits()) + "-qubit model");
    }
}

}  // namespace

DetectorModel::DetectorModel(std::vector<Rates> per_qubit) : per_qubit_(std::move(per_qubit)) {
    if (per_qubit_.empty()) {
        throw InputError("Detector model needs at least one qubit");
    }
    for (std::size_t k = 0; k < per_qubit_.size(); k++) {
        if (!is_probability(per_qubit_[k].p0) || !is_probability(per_qubit_[k].p1)) {
            throw InputError("Rates of qubit " + std::to_string(k) + " must lie in [0, 1]");
        }
    }
}

DetectorModel DetectorModel::uniform(std::size_t num_qubits, double p0, double p1) {
    return DetectorModel(std::vector<Rates>(num_qubits, Rates{p0, p1}));
}

DetectorModel DetectorModel::ideal(std::size_t num_qubits) { return uniform(num_qubits, 0, 0); }

const Rates &DetectorModel::rates(std::size_t qubit) const {
    if (qubit >= per_qubit_.size()) {
        throw InputError("Qubit " + std::to_string(qubit) + " out of range for a " +
                         std::to_string(per_qubit_.size()) + "-qubit model");
    }
    return per_qubit_[qubit];
}

bool DetectorModel::is_invertible() const {
    for (const auto &r : per_qubit_) {
        if (std::abs(r.p0 + r.p1 - 1) <= kSingularTolerance) {
            return false;
        }
    }
    return true;
}

bool DetectorModel::is_uniform() const {
    for (const auto &r : per_qubit_) {
        if (r != per_qubit_.front()) {
            return false;
        }
    }
    return true;
}

Rates DetectorModel::inverse_rates(std::size_t qubit) const {
    const Rates &r = rates(qubit);
    double det = r.p0 + r.p1 - 1;
    if (std::abs(det) <= kSingularTolerance) {
        throw SingularModelError("Detector of qubit " + std::to_string(qubit) +
                                 " has p0 + p1 = 1 and cannot be inverted");
    }
    return Rates{r.p0 / det, r.p1 / det};
}

Matrix2 single_qubit_matrix(const DetectorModel &model, std::size_t qubit) {
    const Rates &r = model.rates(qubit);
    return Matrix2{{{1 - r.p0, r.p1}, {r.p0, 1 - r.p1}}};
}

Matrix2 single_qubit_inverse(const DetectorModel &model, std::size_t qubit) {
    Rates r = model.inverse_rates(qubit);
    return Matrix2{{{1 - r.p0, r.p1}, {r.p0, 1 - r.p1}}};
}

void apply_kronecker(std::span<const Matrix2> factors, std::span<double> v) {
    if (factors.size() > kMaxOutcomeQubits || v.size() != outcome_count(factors.size())) {
        throw InputError("Vector of length " + std::to_string(v.size()) + " does not match " +
                         std::to_string(factors.size()) + " tensor factors");
    }
    const std::size_t size = v.size();
    for (std::size_t k = 0; k < factors.size(); k++) {
        const Matrix2 &m = factors[k];
        const std::size_t stride = std::size_t{1} << k;
        for (std::size_t base = 0; base < size; base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; i++) {
                double a = v[i];
                double b = v[i + stride];
                v[i] = m[0][0] * a + m[0][1] * b;
                v[i + stride] = m[1][0] * a + m[1][1] * b;
            }
        }
    }
}

std::vector<double> apply_m(const DetectorModel &model, std::span<const double> g) {
    check_dimension(model, g.size());
    std::vector<double> f(g.begin(), g.end());
    apply_kronecker(forward_factors(model), f);
    return f;
}

std::vector<double> apply_m_inverse(const DetectorModel &model, std::span<const double> f) {
    check_dimension(model, f.size());
    std::vector<double> g(f.begin(), f.end());
    apply_kronecker(inverse_factors(model), g);
    return g;
}

std::vector<double> apply_m_inverse_squared(const DetectorModel &model, std::span<const double> f) {
    check_dimension(model, f.size());
    auto factors = inverse_factors(model);
    for (auto &m : factors) {
        for (auto &row : m) {
            for (auto &x : row) {
                x *= x;
            }
        }
    }
    std::vector<double> h(f.begin(), f.end());
    apply_kronecker(factors, h);
    return h;
}

double m_element(const DetectorModel &model, Outcome recorded, Outcome true_outcome) {
    const std::size_t n = model.num_qubits();
    if (n > kMaxOutcomeQubits || recorded >= outcome_count(n) || true_outcome >= outcome_count(n)) {
        throw InputError("Outcome index out of range for a " + std::to_string(n) + "-qubit model");
    }
    double result = 1;
    for (std::size_t k = 0; k < n; k++) {
        const Rates &r = model.rates(k);
        unsigned j = outcome_bit(recorded, k);
        unsigned i = outcome_bit(true_outcome, k);
        if (i == 0) {
            result *= j == 0 ? 1 - r.p0 : r.p0;
        } else {
            result *= j == 1 ? 1 - r.p1 : r.p1;
        }
    }
    return result;
}

CalibrationResult calibrate(std::span<const CalibrationRun> runs) {
    if (runs.empty()) {
        throw NoDataError("No calibration runs supplied");
    }
    const std::size_t n = runs.front().counts.num_qubits();
    // flips[k][b]: shots with qubit k prepared in b that read !b.
    std::vector<std::array<std::uint64_t, 2>> prepared(n, {0, 0});
    std::vector<std::array<std::uint64_t, 2>> flips(n, {0, 0});
    for (const auto &run : runs) {
        if (run.counts.num_qubits() != n) {
            throw InputError("Calibration runs disagree on qubit count");
        }
        if (run.prepared >= outcome_count(n)) {
            throw InputError("Prepared state out of range for " + std::to_string(n) + " qubits");
        }
        for (const auto &[outcome, count] : run.counts.counts()) {
            for (std::size_t k = 0; k < n; k++) {
                unsigned b = outcome_bit(run.prepared, k);
                prepared[k][b] += count;
                if (outcome_bit(outcome, k) != b) {
                    flips[k][b] += count;
                }
            }
        }
    }

    std::string missing;
    for (std::size_t k = 0; k < n; k++) {
        for (unsigned b = 0; b < 2; b++) {
            if (prepared[k][b] == 0) {
                missing += " p" + std::to_string(b) + "[qubit " + std::to_string(k) + "]";
            }
        }
    }
    if (!missing.empty()) {
        throw NoDataError("Calibration runs never prepare the state needed to estimate:" + missing +
                          " (supply both all-zeros and all-ones type runs)");
    }

    std::vector<Rates> rates(n);
    std::vector<Rates> sigmas(n);
    for (std::size_t k = 0; k < n; k++) {
        double n0 = static_cast<double>(prepared[k][0]);
        double n1 = static_cast<double>(prepared[k][1]);
        rates[k].p0 = static_cast<double>(flips[k][0]) / n0;
        rates[k].p1 = static_cast<double>(flips[k][1]) / n1;
        sigmas[k].p0 = std::sqrt(rates[k].p0 * (1 - rates[k].p0) / n0);
        sigmas[k].p1 = std::sqrt(rates[k].p1 * (1 - rates[k].p1) / n1);
    }
    return CalibrationResult{DetectorModel(std::move(rates)), std::move(sigmas), std::move(prepared)};
}

}  // namespace detmit
