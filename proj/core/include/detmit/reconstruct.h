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

#ifndef DETMIT_RECONSTRUCT_H
#define DETMIT_RECONSTRUCT_H

#include <cstddef>
#include <span>
#include <vector>

#include "detmit/counts.h"
#include "detmit/detector_model.h"

namespace detmit {

/// Largest n for which a full 2^n distribution is materialized.
inline constexpr std::size_t kMaxDenseDistributionQubits = 26;

/// Probability vector with per-entry one-sigma errors.
struct Distribution {
    std::vector<double> values;
    std::vector<double> sigmas;
    double shots = 0;
    /// Entries whose variance estimate came out negative and was clamped to 0.
    std::vector<bool> clamped;
};

/// f_i = N_i / N, sigma_i = sqrt(f_i (1 - f_i) / N).
/// Throws ResourceLimitError above kMaxDenseDistributionQubits.
Distribution frequencies(const CountsRecord &counts);

/// g = M^-1 f with sigma_i = sqrt((sum_j (M^-1_ij)^2 f_j - g_i^2) / N).
Distribution correct(const CountsRecord &counts, const DetectorModel &model);

/// Same as above for a measured distribution (values = f, shots = N).
Distribution correct(const Distribution &measured, const DetectorModel &model);

/// Euclidean projection onto the probability simplex.
std::vector<double> project_to_simplex(std::span<const double> values);

}  // namespace detmit

#endif
