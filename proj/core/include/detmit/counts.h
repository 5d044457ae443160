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

#ifndef DETMIT_COUNTS_H
#define DETMIT_COUNTS_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "detmit/bits.h"

namespace detmit {

/// Per-qubit measurement basis, one of 'X', 'Y', 'Z' per qubit, qubit 0
/// leftmost. The empty string is normalized to all-'Z'.
std::string normalize_setting(std::string setting, std::size_t num_qubits);

/// Raw shot counts for one measurement setting.
class CountsRecord {
   public:
    /// Throws InputError if an outcome is out of range, the setting is
    /// malformed, or the record holds no shots.
    CountsRecord(std::size_t num_qubits, std::string setting, std::map<Outcome, std::uint64_t> counts);

    std::size_t num_qubits() const { return num_qubits_; }
    const std::string &setting() const { return setting_; }
    const std::map<Outcome, std::uint64_t> &counts() const { return counts_; }
    std::uint64_t shots() const { return shots_; }

    std::uint64_t count(Outcome outcome) const;

    bool operator==(const CountsRecord &) const = default;

   private:
    std::size_t num_qubits_;
    std::string setting_;
    std::map<Outcome, std::uint64_t> counts_;
    std::uint64_t shots_;
};

/// Builds a CountsRecord from a list of individual shot outcomes.
CountsRecord tally(std::size_t num_qubits, std::string setting, std::span<const Outcome> shots);

/// Outcome weights (frequencies or exact probabilities) with the shot count
/// used for standard errors. Sparse: only outcomes with nonzero weight.
struct WeightedOutcomes {
    std::size_t num_qubits = 0;
    std::string setting;
    std::vector<std::pair<Outcome, double>> entries;
    double shots = 0;
};

WeightedOutcomes weighted_outcomes(const CountsRecord &counts);

/// Wraps a dense probability vector of length 2^n as weights; zero entries
/// are dropped. `shots` only sets the scale of reported standard errors.
WeightedOutcomes weighted_outcomes(
    std::size_t num_qubits, std::string setting, std::span<const double> probabilities, double shots);

/// Histogram of recorded excitation numbers (how many qubits read 1).
class CollectiveCounts {
   public:
    /// Entry m is the number of shots recording m excitations. n = size - 1.
    explicit CollectiveCounts(std::vector<std::uint64_t> counts);

    std::size_t num_qubits() const { return counts_.size() - 1; }
    const std::vector<std::uint64_t> &counts() const { return counts_; }
    std::uint64_t shots() const { return shots_; }

    bool operator==(const CollectiveCounts &) const = default;

   private:
    std::vector<std::uint64_t> counts_;
    std::uint64_t shots_;
};

/// Collapses individually addressed counts onto excitation numbers.
CollectiveCounts aggregate(const CountsRecord &counts);

/// Multinomial resample of `counts.shots()` shots from the empirical
/// distribution; deterministic in (seed, replicate).
CountsRecord resample(const CountsRecord &counts, std::uint64_t seed, std::uint64_t replicate);

}  // namespace detmit

#endif
