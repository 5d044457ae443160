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

#ifndef DETMIT_OBSERVABLES_H
#define DETMIT_OBSERVABLES_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "detmit/counts.h"
#include "detmit/detector_model.h"
#include "detmit/graph.h"
#include "detmit/pauli.h"

namespace detmit {

struct Estimate {
    double value = 0;
    double sigma = 0;
};

/// Diagonal observable over measured outcomes: coefficient times a product
/// of per-qubit row vectors over its support. With rows [1, -1] this is the
/// bare Pauli eigenvalue; with rows [1 - 2p0', -(1 - 2p1')] it is the
/// corrected operator whose expectation under distorted data equals the
/// true expectation.
class DiagonalObservable {
   public:
    static DiagonalObservable raw(const PauliString &obs);
    /// Throws SingularModelError if a support qubit's detector is singular.
    static DiagonalObservable corrected(const PauliString &obs, const DetectorModel &model);

    double value(Outcome outcome) const;
    std::size_t support_size() const { return support_.size(); }
    double coefficient() const { return coefficient_; }

   private:
    double coefficient_ = 1;
    std::vector<std::size_t> support_;
    std::vector<std::array<double, 2>> rows_;
};

/// Sum over terms; evaluates to the sum of term values.
class DiagonalSum {
   public:
    void add(DiagonalObservable term) { terms_.push_back(std::move(term)); }
    double value(Outcome outcome) const;
    std::size_t size() const { return terms_.size(); }

   private:
    std::vector<DiagonalObservable> terms_;
};

/// value = sum_i w_i O(i); sigma = sqrt((sum_i w_i O(i)^2 - value^2) / N).
Estimate expect_diagonal(const WeightedOutcomes &data, const std::function<double(Outcome)> &observable);

/// Throws InputError if the data's setting cannot measure obs.
Estimate expect_raw(const WeightedOutcomes &data, const PauliString &obs);
Estimate expect_raw(const CountsRecord &counts, const PauliString &obs);

/// Scalar c with O^c = c O, which exists when every support qubit has
/// p0 = p1. For uniform p this is (1 - 2p)^-n_p. Throws InputError if the
/// rates on the support are asymmetric (use DiagonalObservable::corrected).
double correction_factor(const PauliString &obs, const DetectorModel &model);

Estimate expect_corrected(const WeightedOutcomes &data, const PauliString &obs, const DetectorModel &model);
Estimate expect_corrected(const CountsRecord &counts, const PauliString &obs, const DetectorModel &model);

/// Standard deviation of `statistic` over multinomial resamples of counts.
double bootstrap_sigma(const CountsRecord &counts,
                       const std::function<double(const WeightedOutcomes &)> &statistic,
                       std::size_t resamples,
                       std::uint64_t seed);

/// Distribution of recorded excitation numbers m with its shot count.
struct ExcitationHistogram {
    std::vector<double> probabilities;
    double shots = 0;

    std::size_t num_qubits() const { return probabilities.size() - 1; }

    static ExcitationHistogram from(const CollectiveCounts &counts);
    static ExcitationHistogram from(const CountsRecord &counts);
    /// Throws InputError on fewer than 2 entries or nonpositive shots.
    static ExcitationHistogram exact(std::vector<double> probabilities, double shots);
};

/// First and second moments of J = sum_k sigma_k / 2 along the measured
/// axis, where m excitations map to eigenvalue n/2 - m.
struct SpinMoments {
    Estimate first;
    Estimate second;
};

SpinMoments spin_moments(const ExcitationHistogram &data);

struct CorrectedSpinMoments {
    SpinMoments measured;
    SpinMoments corrected;
};

/// J^c = J / (1 - 2p); (J^2)^c = (J^2 - n p (1 - p)) / (1 - 2p)^2.
/// Throws SingularModelError when p is within tolerance of 0.5.
CorrectedSpinMoments jz_moments_corrected(const ExcitationHistogram &data, double p);
CorrectedSpinMoments jz_moments_corrected(const CountsRecord &counts, double p);
CorrectedSpinMoments jz_moments_corrected(const CollectiveCounts &counts, double p);

/// Squeezing along z with mean spin along x.
struct SqueezingInput {
    ExcitationHistogram z;
    ExcitationHistogram x;
    double p = 0;
};

struct SqueezingResult {
    double xi_raw = 0;
    double xi_corrected = 0;
    /// Detection-noise contribution: xi_raw^2 = xi_corrected^2 + xi_d^2.
    double xi_d = 0;
    double xi_raw_sigma = 0;
    /// First-order propagation through both measured moments.
    double xi_corrected_sigma = 0;
    /// xi_raw_sigma * xi_raw / xi_corrected.
    double xi_corrected_sigma_scaled = 0;
    double jx_raw = 0;
    double jx_corrected = 0;
    double jz2_raw = 0;
    double jz2_corrected = 0;
    /// Set when the sampled xi^2 < xi_d^2; xi_corrected is then reported as 0.
    bool negative_radicand = false;
};

/// Throws DegenerateMeanSpinError when |<J_x>| is numerically zero, and
/// InputError when the two histograms disagree on n.
SqueezingResult squeezing_corrected(const SqueezingInput &input);

/// Witness W = 3 - 2 sum_l <prod_{k in Q_l} (S_k + 1) / 2>.
struct WitnessResult {
    Estimate witness;
    std::vector<Estimate> class_products;
};

/// Combines per-color-class projector expectations (independent settings).
Estimate witness_from_products(std::span<const Estimate> class_products);

/// Expectation of one color-class projector from data taken in that class's
/// setting; every expansion term is corrected according to its own support.
Estimate color_class_product(const GraphSpec &graph,
                             std::size_t class_index,
                             const WeightedOutcomes &data,
                             const DetectorModel &model);

/// per_class[l] must be measured in color_class_setting(graph, l). Use
/// DetectorModel::ideal for the uncorrected witness.
WitnessResult witness_value(const GraphSpec &graph,
                            std::span<const WeightedOutcomes> per_class,
                            const DetectorModel &model);
WitnessResult witness_value(const GraphSpec &graph,
                            std::span<const CountsRecord> per_class,
                            const DetectorModel &model);

/// Bootstrap sigma of the witness, resampling each setting independently.
double witness_bootstrap_sigma(const GraphSpec &graph,
                               std::span<const CountsRecord> per_class,
                               const DetectorModel &model,
                               std::size_t resamples,
                               std::uint64_t seed);

struct CalibrationSensitivity {
    /// 2 n_p dp / (1 - 2p) with dp = p e.
    double first_order = 0;
    /// 2 n_p p e.
    double leading = 0;
    /// (1 - 2p)^n_p / (1 - 2p(1 + e))^n_p - 1.
    double exact = 0;
};

/// Relative error of a corrected expectation when p is miscalibrated by the
/// relative amount e. Throws InputError unless 0 < p < 0.5.
CalibrationSensitivity calibration_sensitivity(std::size_t support_size, double p, double relative_error);
CalibrationSensitivity calibration_sensitivity(const PauliString &obs, double p, double relative_error);

}  // namespace detmit

#endif
