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

#include "detmit/reconstruct.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "detmit/errors.h"

namespace detmit {

Distribution frequencies(const CountsRecord &counts) {
    const std::size_t n = counts.num_qubits();
    if (n > kMaxDenseDistributionQubits) {
        throw ResourceLimitError("Refusing to materialize a 2^" + std::to_string(n) +
                                 " distribution; use observable expectations instead");
    }
    const double shots = static_cast<double>(counts.shots());
    Distribution result;
    result.values.assign(outcome_count(n), 0.0);
    result.sigmas.assign(outcome_count(n), 0.0);
    result.clamped.assign(outcome_count(n), false);
    result.shots = shots;
    for (const auto &[outcome, count] : counts.counts()) {
        double f = static_cast<double>(count) / shots;
        result.values[outcome] = f;
        result.sigmas[outcome] = std::sqrt(f * (1 - f) / shots);
    }
    return result;
}

Distribution correct(const Distribution &measured, const DetectorModel &model) {
    if (model.num_qubits() > kMaxDenseDistributionQubits) {
        throw ResourceLimitError("Refusing to correct a 2^" + std::to_string(model.num_qubits()) +
                                 " distribution");
    }
    if (!(measured.shots > 0)) {
        throw InputError("Measured distribution has no shots");
    }
    Distribution result;
    result.shots = measured.shots;
    result.values = apply_m_inverse(model, measured.values);
    std::vector<double> second = apply_m_inverse_squared(model, measured.values);
    result.sigmas.resize(second.size());
    result.clamped.assign(second.size(), false);
    for (std::size_t i = 0; i < second.size(); i++) {
        double radicand = second[i] - result.values[i] * result.values[i];
        if (radicand < 0) {
            result.clamped[i] = true;
            radicand = 0;
        }
        result.sigmas[i] = std::sqrt(radicand / measured.shots);
    }
    return result;
}

Distribution correct(const CountsRecord &counts, const DetectorModel &model) {
    if (counts.num_qubits() != model.num_qubits()) {
        throw InputError("Counts cover " + std::to_string(counts.num_qubits()) + " qubits but the model covers " +
                         std::to_string(model.num_qubits()));
    }
    return correct(frequencies(counts), model);
}

std::vector<double> project_to_simplex(std::span<const double> values) {
    if (values.empty()) {
        return {};
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double running = 0;
    double theta = 0;
    for (std::size_t j = 0; j < sorted.size(); j++) {
        running += sorted[j];
        double candidate = (running - 1) / static_cast<double>(j + 1);
        if (sorted[j] - candidate > 0) {
            theta = candidate;
        }
    }
    std::vector<double> result(values.size());
    for (std::size_t i = 0; i < values.size(); i++) {
        result[i] = std::max(values[i] - theta, 0.0);
    }
    return result;
}

}  // namespace detmit
