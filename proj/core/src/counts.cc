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

#include "detmit/counts.h"

#include <algorithm>

#include "detmit/errors.h"
#include "detmit/rng.h"

namespace detmit {

std::string normalize_setting(std::string setting, std::size_t num_qubits) {
    if (setting.empty()) {
        return std::string(num_qubits, 'Z');
    }
    if (setting.size() != num_qubits) {
        throw InputError("Setting '" + setting + "' has length " + std::to_string(setting.size()) +
                         " but the record has " + std::to_string(num_qubits) + " qubits");
    }
    for (char &c : setting) {
        if (c == 'x' || c == 'y' || c == 'z') {
            c = static_cast<char>(c - 'a' + 'A');
        }
        if (c != 'X' && c != 'Y' && c != 'Z') {
            throw InputError("Setting '" + setting + "' must contain only X, Y, Z");
        }
    }
    return setting;
}

CountsRecord::CountsRecord(std::size_t num_qubits, std::string setting, std::map<Outcome, std::uint64_t> counts)
    : num_qubits_(num_qubits), setting_(), counts_(std::move(counts)), shots_(0) {
    if (num_qubits == 0 || num_qubits > kMaxOutcomeQubits) {
        throw InputError("Qubit count must be in [1, 63], got " + std::to_string(num_qubits));
    }
    setting_ = normalize_setting(std::move(setting), num_qubits);
    for (auto it = counts_.begin(); it != counts_.end();) {
        if (it->first >= outcome_count(num_qubits)) {
            throw InputError("Outcome " + std::to_string(it->first) + " out of range for " +
                             std::to_string(num_qubits) + " qubits");
        }
        shots_ += it->second;
        if (it->second == 0) {
            it = counts_.erase(it);
        } else {
            ++it;
        }
    }
    if (shots_ == 0) {
        throw InputError("Counts record is empty");
    }
}

std::uint64_t CountsRecord::count(Outcome outcome) const {
    auto it = counts_.find(outcome);
    return it == counts_.end() ? 0 : it->second;
}

CountsRecord tally(std::size_t num_qubits, std::string setting, std::span<const Outcome> shots) {
    std::map<Outcome, std::uint64_t> counts;
    for (Outcome s : shots) {
        counts[s]++;
    }
    return CountsRecord(num_qubits, std::move(setting), std::move(counts));
}

WeightedOutcomes weighted_outcomes(const CountsRecord &counts) {
    WeightedOutcomes result;
    result.num_qubits = counts.num_qubits();
    result.setting = counts.setting();
    result.shots = static_cast<double>(counts.shots());
    result.entries.reserve(counts.counts().size());
    for (const auto &[outcome, n] : counts.counts()) {
        result.entries.emplace_back(outcome, static_cast<double>(n) / result.shots);
    }
    return result;
}

WeightedOutcomes weighted_outcomes(
    std::size_t num_qubits, std::string setting, std::span<const double> probabilities, double shots) {
    if (num_qubits == 0 || num_qubits > kMaxOutcomeQubits || probabilities.size() != outcome_count(num_qubits)) {
        throw InputError("Probability vector length does not match 2^n");
    }
    if (!(shots > 0)) {
        throw InputError("Shot count must be positive");
    }
    WeightedOutcomes result;
    result.num_qubits = num_qubits;
    result.setting = normalize_setting(std::move(setting), num_qubits);
    result.shots = shots;
    for (std::size_t i = 0; i < probabilities.size(); i++) {
        if (probabilities[i] != 0) {
            result.entries.emplace_back(static_cast<Outcome>(i), probabilities[i]);
        }
    }
    return result;
}

CollectiveCounts::CollectiveCounts(std::vector<std::uint64_t> counts) : counts_(std::move(counts)), shots_(0) {
    if (counts_.size() < 2) {
        throw InputError("Collective counts need at least 2 entries (n >= 1)");
    }
    for (auto c : counts_) {
        shots_ += c;
    }
    if (shots_ == 0) {
        throw InputError("Collective counts are empty");
    }
}

CollectiveCounts aggregate(const CountsRecord &counts) {
    std::vector<std::uint64_t> hist(counts.num_qubits() + 1, 0);
    for (const auto &[outcome, n] : counts.counts()) {
        hist[hamming_weight(outcome)] += n;
    }
    return CollectiveCounts(std::move(hist));
}

CountsRecord resample(const CountsRecord &counts, std::uint64_t seed, std::uint64_t replicate) {
    std::vector<Outcome> outcomes;
    std::vector<std::uint64_t> cumulative;
    outcomes.reserve(counts.counts().size());
    cumulative.reserve(counts.counts().size());
    std::uint64_t total = 0;
    for (const auto &[outcome, n] : counts.counts()) {
        total += n;
        outcomes.push_back(outcome);
        cumulative.push_back(total);
    }
    std::vector<std::uint64_t> drawn(outcomes.size(), 0);
    CounterRng rng(seed, stream_id("bootstrap"), replicate);
    for (std::uint64_t s = 0; s < total; s++) {
        // Modulo bias is below total / 2^64.
        std::uint64_t r = rng.next_u64() % total;
        auto idx = std::upper_bound(cumulative.begin(), cumulative.end(), r) - cumulative.begin();
        drawn[static_cast<std::size_t>(idx)]++;
    }
    std::map<Outcome, std::uint64_t> result;
    for (std::size_t i = 0; i < outcomes.size(); i++) {
        if (drawn[i]) {
            result.emplace(outcomes[i], drawn[i]);
        }
    }
    return CountsRecord(counts.num_qubits(), counts.setting(), std::move(result));
}

}  // namespace detmit
