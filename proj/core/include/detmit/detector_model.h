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

#ifndef DETMIT_DETECTOR_MODEL_H
#define DETMIT_DETECTOR_MODEL_H

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "detmit/bits.h"
#include "detmit/counts.h"

namespace detmit {

/// Readout flip probabilities of one detector: p0 = P(read 1 | true 0),
/// p1 = P(read 0 | true 1).
struct Rates {
    double p0 = 0;
    double p1 = 0;
    bool operator==(const Rates &) const = default;
};

/// A model is singular when |p0 + p1 - 1| is at or below this.
inline constexpr double kSingularTolerance = 1e-9;

/// Row-major 2x2 matrix; m[recorded][true] for response matrices.
using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Independent per-qubit readout errors. The n-qubit response is the
/// Kronecker product of the per-qubit 2x2 matrices and is never stored.
class DetectorModel {
   public:
    /// Throws InputError if empty or if any rate lies outside [0, 1].
    explicit DetectorModel(std::vector<Rates> per_qubit);

    static DetectorModel uniform(std::size_t num_qubits, double p0, double p1);
    static DetectorModel ideal(std::size_t num_qubits);

    std::size_t num_qubits() const { return per_qubit_.size(); }
    const Rates &rates(std::size_t qubit) const;
    std::span<const Rates> per_qubit() const { return per_qubit_; }

    bool is_invertible() const;
    bool is_uniform() const;

    /// Substituted parameters p0' = p0/(p0+p1-1), p1' = p1/(p0+p1-1) under
    /// which the inverse matrix has the same form as the forward one.
    /// Throws SingularModelError.
    Rates inverse_rates(std::size_t qubit) const;

    bool operator==(const DetectorModel &) const = default;

   private:
    std::vector<Rates> per_qubit_;
};

/// [[1-p0, p1], [p0, 1-p1]]. Columns sum to 1.
Matrix2 single_qubit_matrix(const DetectorModel &model, std::size_t qubit);

/// [[1-p0', p1'], [p0', 1-p1']]. Throws SingularModelError.
Matrix2 single_qubit_inverse(const DetectorModel &model, std::size_t qubit);

/// In-place v <- (F_{n-1} ⊗ ... ⊗ F_0) v, where factor k acts on bit k of the
/// index. O(n 2^n). Throws InputError if v.size() != 2^factors.size().
void apply_kronecker(std::span<const Matrix2> factors, std::span<double> v);

/// f = M g.
std::vector<double> apply_m(const DetectorModel &model, std::span<const double> g);

/// g = M^-1 f. Entries of g may be negative.
std::vector<double> apply_m_inverse(const DetectorModel &model, std::span<const double> f);

/// h_i = sum_j (M^-1_ij)^2 f_j, via the entrywise-squared inverse factors.
std::vector<double> apply_m_inverse_squared(const DetectorModel &model, std::span<const double> f);

/// M_ji = P(record j | true i) = prod_k D_k[j_k][i_k].
double m_element(const DetectorModel &model, Outcome recorded, Outcome true_outcome);

/// A calibration run: counts recorded while a known basis state was fed in.
struct CalibrationRun {
    Outcome prepared = 0;
    CountsRecord counts;
};

struct CalibrationResult {
    DetectorModel model;
    /// Binomial standard errors of p0 and p1 per qubit.
    std::vector<Rates> sigmas;
    /// Number of shots with the qubit prepared in 0 (p0) and in 1 (p1).
    std::vector<std::array<std::uint64_t, 2>> support;
};

/// Frequency estimator of the per-qubit rates. Throws NoDataError listing
/// every qubit whose p0 or p1 is never exercised by the runs.
CalibrationResult calibrate(std::span<const CalibrationRun> runs);

}  // namespace detmit

#endif
