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

#ifndef DETMIT_STATESIM_H
#define DETMIT_STATESIM_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "detmit/counts.h"
#include "detmit/detector_model.h"
#include "detmit/graph.h"
#include "detmit/pauli.h"

namespace detmit {

using Complex = std::complex<double>;

/// Largest n the simulator handles with full 2^n state vectors.
inline constexpr std::size_t kMaxDenseSimulationQubits = 14;
/// Largest n for the 4^n density-matrix backend.
inline constexpr std::size_t kMaxDensityMatrixQubits = 11;

/// Local depolarizing preparation noise:
/// rho -> (1 - 3 p_n / 4) rho + (p_n / 4) sum_mu sigma_mu rho sigma_mu on each qubit.
struct NoiseSpec {
    double p_n = 0;
    /// Throws InputError unless p_n lies in [0, 1].
    void validate() const;
};

struct ShotPlan {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    /// Per-qubit basis strings; see normalize_setting.
    std::vector<std::string> settings;
    unsigned threads = 1;
};

/// (1 - p_n)^{|S_k|} for every stabilizer of the graph.
std::vector<double> stabilizer_expectations_noisy(const GraphSpec &graph, const NoiseSpec &noise);

/// Amplitudes of prod_{(a,b) in E} CZ_ab |+>^n.
std::vector<Complex> graph_state_vector(const GraphSpec &graph);

/// Applies the per-qubit rotation mapping the setting's basis onto the
/// computational basis, eigenvalue +1 to bit 0 (X: H, Y: H S^dagger).
void rotate_to_setting(std::vector<Complex> &state, std::string_view setting);

/// Exact distribution of outcomes of rho_ex measured in the setting, before
/// detector errors. Depolarizing followed by a Pauli-basis measurement flips
/// each measured bit with probability p_n / 2.
std::vector<double> exact_setting_distribution(const GraphSpec &graph, const NoiseSpec &noise,
                                               std::string_view setting);

/// Dense density matrix for cross-checks on small systems.
class DensityMatrix {
   public:
    static DensityMatrix pure(const std::vector<Complex> &state);

    std::size_t num_qubits() const { return num_qubits_; }
    Complex operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    /// Operator-sum depolarizing channel on every qubit.
    void depolarize(double p_n);
    /// Conjugation rho -> P rho P by a single-qubit Pauli on `qubit`.
    DensityMatrix conjugated(Pauli p, std::size_t qubit) const;
    Complex expectation(const PauliString &obs) const;
    double trace() const;
    /// Diagonal after rotating into the setting.
    std::vector<double> measurement_distribution(std::string_view setting) const;

   private:
    std::size_t num_qubits_ = 0;
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Draws `shots` outcomes from the exact setting distribution, then flips
/// each bit with the detector's p0 / p1. Shot i uses a counter RNG
/// keyed by (seed, stream, i), so results do not depend on `threads`.
/// Throws ResourceLimitError above kMaxDenseSimulationQubits.
CountsRecord sample_setting(const GraphSpec &graph,
                            const NoiseSpec &noise,
                            std::string_view setting,
                            const DetectorModel &model,
                            std::uint64_t shots,
                            std::uint64_t seed,
                            std::uint64_t stream,
                            unsigned threads = 1);

/// One record per plan setting; setting i uses stream i.
std::vector<CountsRecord> sample_plan(const GraphSpec &graph,
                                      const NoiseSpec &noise,
                                      const DetectorModel &model,
                                      const ShotPlan &plan);

/// Samples outcomes from an arbitrary distribution over 2^n outcomes and
/// applies detector flips. Building block of sample_setting.
std::vector<Outcome> sample_outcomes(std::span<const double> distribution,
                                     const DetectorModel &model,
                                     std::uint64_t shots,
                                     std::uint64_t seed,
                                     std::uint64_t stream,
                                     unsigned threads = 1);

/// Collective-detector sampling for large n: draws a true excitation number
/// from `excitations` (length n + 1), then flips each excited qubit to 0 with
/// p1 and each unexcited qubit to 1 with p0.
CollectiveCounts sample_collective(std::span<const double> excitations,
                                   double p0,
                                   double p1,
                                   std::uint64_t shots,
                                   std::uint64_t seed,
                                   std::uint64_t stream = 0);

}  // namespace detmit

#endif
