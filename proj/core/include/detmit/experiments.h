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

#ifndef DETMIT_EXPERIMENTS_H
#define DETMIT_EXPERIMENTS_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "detmit/graph.h"
#include "detmit/observables.h"

namespace detmit {

inline constexpr std::uint64_t kDefaultSeed = 1;

// Stabilizers before and after correction, GHZ and linear cluster states.

struct Figure1Config {
    std::size_t num_qubits = 10;
    double p = 0.03;
    double p_n = 0;
    std::uint64_t shots = 5000;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
    /// Bootstrap resamples per stabilizer; 0 disables the bootstrap columns.
    std::size_t bootstrap = 200;
};

struct Figure1Row {
    std::string state;
    std::size_t k = 0;
    std::size_t support = 0;
    /// (1 - 2p)^support (1 - p_n)^support: noiseless-limit raw value.
    double raw_expected = 0;
    /// (1 - p_n)^support: noiseless-limit corrected value.
    double corrected_expected = 0;
    Estimate raw;
    Estimate corrected;
    double raw_bootstrap_sigma = 0;
    double corrected_bootstrap_sigma = 0;
};

std::vector<Figure1Row> figure1_experiment(const Figure1Config &config);

// Witness versus preparation noise.

/// 0 to 0.10 in steps of 0.005.
std::vector<double> default_p_n_grid();

struct Figure2Config {
    std::size_t num_qubits = 10;
    double p = 0.03;
    std::vector<double> p_n_grid = default_p_n_grid();
    std::uint64_t shots = 5000;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
    std::size_t bootstrap = 200;
};

struct Figure2Row {
    std::string state;
    double p_n = 0;
    Estimate raw;
    Estimate corrected;
    /// Infinite-shot values from the exact distorted distributions.
    double raw_exact = 0;
    double corrected_exact = 0;
    double raw_bootstrap_sigma = 0;
    double corrected_bootstrap_sigma = 0;
};

std::vector<Figure2Row> figure2_experiment(const Figure2Config &config);

/// Exact raw and corrected witness for one graph (no sampling).
struct ExactWitness {
    double raw = 0;
    double corrected = 0;
};
ExactWitness exact_witness(const GraphSpec &graph, double p, double p_n);

}  // namespace detmit

#endif
