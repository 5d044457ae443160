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

#include "detmit/statesim.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <thread>

#include "detmit/errors.h"
#include "detmit/rng.h"

namespace detmit {

namespace {

using Gate = std::array<std::array<Complex, 2>, 2>;

const double kInvSqrt2 = 1 / std::sqrt(2.0);

Gate setting_rotation(char basis) {
    const Complex i(0, 1);
    switch (basis) {
        case 'X':
            return Gate{{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}};
        case 'Y':
            // H S^dagger.
            return Gate{{{kInvSqrt2, -i * kInvSqrt2}, {kInvSqrt2, i * kInvSqrt2}}};
        default:
            return Gate{{{1, 0}, {0, 1}}};
    }
}

void apply_gate(std::span<Complex> v, const Gate &g, std::size_t qubit, std::size_t offset_stride = 1) {
    const std::size_t stride = (std::size_t{1} << qubit) * offset_stride;
    const std::size_t size = v.size();
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; i++) {
            Complex a = v[i];
            Complex b = v[i + stride];
            v[i] = g[0][0] * a + g[0][1] * b;
            v[i + stride] = g[1][0] * a + g[1][1] * b;
        }
    }
}

void check_dense_limit(std::size_t n, std::size_t limit, const char *what) {
    if (n > limit) {
        throw ResourceLimitError(std::string(what) + " is limited to " + std::to_string(limit) + " qubits, got " +
                                 std::to_string(n));
    }
}

// Phase picked up by a single-qubit Pauli acting on basis bit b: P|b> = phase |b ^ flip>.
Complex pauli_phase(Pauli p, unsigned b) {
    switch (p) {
        case Pauli::Y:
            return b ? Complex(0, -1) : Complex(0, 1);
        case Pauli::Z:
            return b ? Complex(-1, 0) : Complex(1, 0);
        default:
            return Complex(1, 0);
    }
}

bool pauli_flips(Pauli p) { return p == Pauli::X || p == Pauli::Y; }

}  // namespace

void NoiseSpec::validate() const {
    if (!(p_n >= 0 && p_n <= 1)) {
        throw InputError("Depolarizing probability must lie in [0, 1]");
    }
}

std::vector<double> stabilizer_expectations_noisy(const GraphSpec &graph, const NoiseSpec &noise) {
    noise.validate();
    std::vector<double> result;
    for (const PauliString &s : stabilizers(graph)) {
        result.push_back(std::pow(1 - noise.p_n, static_cast<double>(s.support_size())));
    }
    return result;
}

std::vector<Complex> graph_state_vector(const GraphSpec &graph) {
    const std::size_t n = graph.num_vertices();
    check_dense_limit(n, kMaxDenseSimulationQubits, "Dense graph-state simulation");
    const double amp = std::pow(2.0, -static_cast<double>(n) / 2);
    std::vector<Complex> state(outcome_count(n));
    for (Outcome i = 0; i < state.size(); i++) {
        unsigned parity = 0;
        for (const auto &[a, b] : graph.edges()) {
            parity ^= outcome_bit(i, a) & outcome_bit(i, b);
        }
        state[i] = parity ? -amp : amp;
    }
    return state;
}

void rotate_to_setting(std::vector<Complex> &state, std::string_view setting) {
    std::size_t n = setting.size();
    if (state.size() != outcome_count(n)) {
        throw InputError("State size does not match setting length");
    }
    for (std::size_t k = 0; k < n; k++) {
        if (setting[k] != 'Z') {
            apply_gate(state, setting_rotation(setting[k]), k);
        }
    }
}

std::vector<double> exact_setting_distribution(const GraphSpec &graph, const NoiseSpec &noise,
                                               std::string_view setting) {
    noise.validate();
    const std::size_t n = graph.num_vertices();
    std::string normalized = normalize_setting(std::string(setting), n);
    std::vector<Complex> state = graph_state_vector(graph);
    rotate_to_setting(state, normalized);
    std::vector<double> probs(state.size());
    for (std::size_t i = 0; i < state.size(); i++) {
        probs[i] = std::norm(state[i]);
    }
    if (noise.p_n > 0) {
        const double q = noise.p_n / 2;
        std::vector<Matrix2> flips(n, Matrix2{{{1 - q, q}, {q, 1 - q}}});
        apply_kronecker(flips, probs);
    }
    return probs;
}

DensityMatrix DensityMatrix::pure(const std::vector<Complex> &state) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < state.size()) {
        n++;
    }
    if ((std::size_t{1} << n) != state.size()) {
        throw InputError("State length is not a power of two");
    }
    check_dense_limit(n, kMaxDensityMatrixQubits, "Density-matrix simulation");
    DensityMatrix rho;
    rho.num_qubits_ = n;
    rho.dim_ = state.size();
    rho.data_.resize(rho.dim_ * rho.dim_);
    for (std::size_t a = 0; a < rho.dim_; a++) {
        for (std::size_t b = 0; b < rho.dim_; b++) {
            rho.data_[a * rho.dim_ + b] = state[a] * std::conj(state[b]);
        }
    }
    return rho;
}

DensityMatrix DensityMatrix::conjugated(Pauli p, std::size_t qubit) const {
    DensityMatrix out = *this;
    const std::size_t flip = pauli_flips(p) ? (std::size_t{1} << qubit) : 0;
    for (std::size_t a = 0; a < dim_; a++) {
        Complex pa = pauli_phase(p, outcome_bit(a, qubit));
        for (std::size_t b = 0; b < dim_; b++) {
            Complex pb = pauli_phase(p, outcome_bit(b, qubit));
            out.data_[(a ^ flip) * dim_ + (b ^ flip)] = pa * std::conj(pb) * data_[a * dim_ + b];
        }
    }
    return out;
}

void DensityMatrix::depolarize(double p_n) {
    NoiseSpec{p_n}.validate();
    for (std::size_t k = 0; k < num_qubits_; k++) {
        DensityMatrix x = conjugated(Pauli::X, k);
        DensityMatrix y = conjugated(Pauli::Y, k);
        DensityMatrix z = conjugated(Pauli::Z, k);
        for (std::size_t i = 0; i < data_.size(); i++) {
            data_[i] = (1 - 3 * p_n / 4) * data_[i] + (p_n / 4) * (x.data_[i] + y.data_[i] + z.data_[i]);
        }
    }
}

Complex DensityMatrix::expectation(const PauliString &obs) const {
    if (obs.num_qubits() != num_qubits_) {
        throw InputError("Observable size does not match density matrix");
    }
    std::size_t flip = 0;
    for (std::size_t k = 0; k < num_qubits_; k++) {
        if (pauli_flips(obs.factor(k))) {
            flip |= std::size_t{1} << k;
        }
    }
    // tr(rho P) = sum_a rho[a ^ flip, a] phase(a), with P|a> = phase(a) |a ^ flip>.
    Complex total = 0;
    for (std::size_t a = 0; a < dim_; a++) {
        Complex phase = obs.coefficient();
        for (std::size_t k = 0; k < num_qubits_; k++) {
            phase *= pauli_phase(obs.factor(k), outcome_bit(a, k));
        }
        total += data_[(a ^ flip) * dim_ + a] * phase;
    }
    return total;
}

double DensityMatrix::trace() const {
    double t = 0;
    for (std::size_t a = 0; a < dim_; a++) {
        t += data_[a * dim_ + a].real();
    }
    return t;
}

std::vector<double> DensityMatrix::measurement_distribution(std::string_view setting) const {
    std::string normalized = normalize_setting(std::string(setting), num_qubits_);
    std::vector<Complex> work = data_;
    // Left multiply by U acts on row indices (stride dim_), right multiply by
    // U^dagger acts on column indices.
    for (std::size_t k = 0; k < num_qubits_; k++) {
        if (normalized[k] == 'Z') {
            continue;
        }
        Gate g = setting_rotation(normalized[k]);
        Gate g_conj;
        for (int r = 0; r < 2; r++) {
            for (int c = 0; c < 2; c++) {
                g_conj[r][c] = std::conj(g[r][c]);
            }
        }
        apply_gate(work, g, k, dim_);
        for (std::size_t row = 0; row < dim_; row++) {
            apply_gate(std::span<Complex>(work).subspan(row * dim_, dim_), g_conj, k);
        }
    }
    std::vector<double> diag(dim_);
    for (std::size_t a = 0; a < dim_; a++) {
        diag[a] = work[a * dim_ + a].real();
    }
    return diag;
}

std::vector<Outcome> sample_outcomes(std::span<const double> distribution,
                                     const DetectorModel &model,
                                     std::uint64_t shots,
                                     std::uint64_t seed,
                                     std::uint64_t stream,
                                     unsigned threads) {
    const std::size_t n = model.num_qubits();
    if (n > kMaxOutcomeQubits || distribution.size() != outcome_count(n)) {
        throw InputError("Distribution length does not match the detector model");
    }
    std::vector<double> cdf(distribution.size());
    double total = 0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < distribution.size(); i++) {
        if (distribution[i] < 0) {
            throw InputError("Sampling distribution has a negative entry");
        }
        total += distribution[i];
        cdf[i] = total;
        if (distribution[i] > 0) {
            last_nonzero = i;
        }
    }
    if (!(total > 0)) {
        throw InputError("Sampling distribution is zero");
    }

    std::vector<Outcome> outcomes(shots);
    auto run = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t s = begin; s < end; s++) {
            CounterRng rng(seed, stream, s);
            double u = rng.uniform() * total;
            auto idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
            Outcome o = static_cast<Outcome>(std::min(idx, last_nonzero));
            for (std::size_t k = 0; k < n; k++) {
                const Rates &r = model.rates(k);
                double flip = outcome_bit(o, k) ? r.p1 : r.p0;
                if (rng.uniform() < flip) {
                    o ^= Outcome{1} << k;
                }
            }
            outcomes[s] = o;
        }
    };

    threads = std::max(1u, threads);
    if (threads == 1 || shots < 2 * threads) {
        run(0, shots);
    } else {
        std::vector<std::thread> workers;
        const std::uint64_t chunk = (shots + threads - 1) / threads;
        for (unsigned t = 0; t < threads; t++) {
            std::uint64_t begin = std::min<std::uint64_t>(shots, t * chunk);
            std::uint64_t end = std::min<std::uint64_t>(shots, begin + chunk);
            workers.emplace_back(run, begin, end);
        }
        for (auto &w : workers) {
            w.join();
        }
    }
    return outcomes;
}

CountsRecord sample_setting(const GraphSpec &graph,
                            const NoiseSpec &noise,
                            std::string_view setting,
                            const DetectorModel &model,
                            std::uint64_t shots,
                            std::uint64_t seed,
                            std::uint64_t stream,
                            unsigned threads) {
    const std::size_t n = graph.num_vertices();
    check_dense_limit(n, kMaxDenseSimulationQubits, "Shot sampling");
    if (model.num_qubits() != n) {
        throw InputError("Detector model and graph disagree on qubit count");
    }
    if (shots == 0) {
        throw InputError("Shot plan needs at least one shot");
    }
    std::string normalized = normalize_setting(std::string(setting), n);
    std::vector<double> dist = exact_setting_distribution(graph, noise, normalized);
    std::vector<Outcome> outcomes = sample_outcomes(dist, model, shots, seed, stream, threads);
    return tally(n, normalized, outcomes);
}

std::vector<CountsRecord> sample_plan(const GraphSpec &graph,
                                      const NoiseSpec &noise,
                                      const DetectorModel &model,
                                      const ShotPlan &plan) {
    std::vector<CountsRecord> result;
    for (std::size_t i = 0; i < plan.settings.size(); i++) {
        result.push_back(sample_setting(graph, noise, plan.settings[i], model, plan.shots, plan.seed, i, plan.threads));
    }
    return result;
}

CollectiveCounts sample_collective(std::span<const double> excitations,
                                   double p0,
                                   double p1,
                                   std::uint64_t shots,
                                   std::uint64_t seed,
                                   std::uint64_t stream) {
    if (excitations.size() < 2) {
        throw InputError("Excitation distribution needs n + 1 >= 2 entries");
    }
    if (!(p0 >= 0 && p0 <= 1 && p1 >= 0 && p1 <= 1)) {
        throw InputError("Flip probabilities must lie in [0, 1]");
    }
    const std::size_t n = excitations.size() - 1;
    std::vector<double> cdf(excitations.size());
    double total = 0;
    for (std::size_t m = 0; m <= n; m++) {
        if (excitations[m] < 0) {
            throw InputError("Excitation distribution has a negative entry");
        }
        total += excitations[m];
        cdf[m] = total;
    }
    if (!(total > 0)) {
        throw InputError("Excitation distribution is zero");
    }
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (std::uint64_t s = 0; s < shots; s++) {
        CounterRng rng(seed, stream, s);
        double u = rng.uniform() * total;
        auto m = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        m = std::min(m, n);
        std::size_t recorded = 0;
        for (std::size_t k = 0; k < n; k++) {
            bool excited = k < m;
            double flip = excited ? p1 : p0;
            bool reads_one = excited != (rng.uniform() < flip);
            recorded += reads_one;
        }
        counts[recorded]++;
    }
    return CollectiveCounts(std::move(counts));
}

}  // namespace detmit
