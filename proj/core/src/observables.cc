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

#include "detmit/observables.h"

#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "detmit/errors.h"
#include "detmit/rng.h"

namespace detmit {

namespace {

void require_measurable(const WeightedOutcomes &data, const PauliString &obs) {
    if (data.num_qubits != obs.num_qubits()) {
        throw InputError("Observable " + obs.str() + " acts on " + std::to_string(obs.num_qubits()) +
                         " qubits but the data covers " + std::to_string(data.num_qubits));
    }
    if (!obs.measurable_in(data.setting)) {
        throw InputError("Observable " + obs.str() + " is not diagonal in measurement setting " + data.setting);
    }
}

double sample_stddev(const std::vector<double> &xs) {
    if (xs.size() < 2) {
        return 0;
    }
    double mean = 0;
    for (double x : xs) {
        mean += x;
    }
    mean /= static_cast<double>(xs.size());
    double ss = 0;
    for (double x : xs) {
        ss += (x - mean) * (x - mean);
    }
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

double checked_contrast(double p) {
    double s = 1 - 2 * p;
    if (std::abs(s) <= kSingularTolerance) {
        throw SingularModelError("Flip probability 0.5 makes the detector singular");
    }
    return s;
}

DiagonalSum class_projector(const GraphSpec &graph, std::size_t class_index, const WeightedOutcomes &data,
                            const DetectorModel &model) {
    if (model.num_qubits() != graph.num_vertices()) {
        throw InputError("Detector model and graph disagree on qubit count");
    }
    DiagonalSum sum;
    for (const PauliString &term : color_class_projector_terms(graph, class_index)) {
        require_measurable(data, term);
        sum.add(DiagonalObservable::corrected(term, model));
    }
    return sum;
}

}  // namespace

DiagonalObservable DiagonalObservable::raw(const PauliString &obs) {
    DiagonalObservable result;
    result.coefficient_ = obs.coefficient();
    for (std::size_t k = 0; k < obs.num_qubits(); k++) {
        if (obs.factor(k) != Pauli::I) {
            result.support_.push_back(k);
            result.rows_.push_back({1.0, -1.0});
        }
    }
    return result;
}

DiagonalObservable DiagonalObservable::corrected(const PauliString &obs, const DetectorModel &model) {
    if (model.num_qubits() != obs.num_qubits()) {
        throw InputError("Observable " + obs.str() + " and detector model disagree on qubit count");
    }
    DiagonalObservable result;
    result.coefficient_ = obs.coefficient();
    for (std::size_t k = 0; k < obs.num_qubits(); k++) {
        if (obs.factor(k) != Pauli::I) {
            // [1, -1] D_k^-1 = [1 - 2p0', -(1 - 2p1')].
            Rates inv = model.inverse_rates(k);
            result.support_.push_back(k);
            result.rows_.push_back({1 - 2 * inv.p0, -(1 - 2 * inv.p1)});
        }
    }
    return result;
}

double DiagonalObservable::value(Outcome outcome) const {
    double v = coefficient_;
    for (std::size_t s = 0; s < support_.size(); s++) {
        v *= rows_[s][outcome_bit(outcome, support_[s])];
    }
    return v;
}

double DiagonalSum::value(Outcome outcome) const {
    double v = 0;
    for (const auto &t : terms_) {
        v += t.value(outcome);
    }
    return v;
}

Estimate expect_diagonal(const WeightedOutcomes &data, const std::function<double(Outcome)> &observable) {
    if (!(data.shots > 0)) {
        throw InputError("Data has no shots");
    }
    double first = 0;
    double second = 0;
    for (const auto &[outcome, w] : data.entries) {
        double v = observable(outcome);
        first += w * v;
        second += w * v * v;
    }
    double radicand = std::max(second - first * first, 0.0);
    return Estimate{first, std::sqrt(radicand / data.shots)};
}

Estimate expect_raw(const WeightedOutcomes &data, const PauliString &obs) {
    require_measurable(data, obs);
    DiagonalObservable diag = DiagonalObservable::raw(obs);
    return expect_diagonal(data, [&](Outcome o) { return diag.value(o); });
}

Estimate expect_raw(const CountsRecord &counts, const PauliString &obs) {
    return expect_raw(weighted_outcomes(counts), obs);
}

double correction_factor(const PauliString &obs, const DetectorModel &model) {
    if (model.num_qubits() != obs.num_qubits()) {
        throw InputError("Observable " + obs.str() + " and detector model disagree on qubit count");
    }
    double factor = 1;
    for (std::size_t k = 0; k < obs.num_qubits(); k++) {
        if (obs.factor(k) == Pauli::I) {
            continue;
        }
        const Rates &r = model.rates(k);
        if (r.p0 != r.p1) {
            throw InputError("Qubit " + std::to_string(k) +
                             " has p0 != p1; the corrected operator is not a rescaling of " + obs.str());
        }
        factor /= checked_contrast(r.p0);
    }
    return factor;
}

Estimate expect_corrected(const WeightedOutcomes &data, const PauliString &obs, const DetectorModel &model) {
    require_measurable(data, obs);
    DiagonalObservable diag = DiagonalObservable::corrected(obs, model);
    return expect_diagonal(data, [&](Outcome o) { return diag.value(o); });
}

Estimate expect_corrected(const CountsRecord &counts, const PauliString &obs, const DetectorModel &model) {
    return expect_corrected(weighted_outcomes(counts), obs, model);
}

double bootstrap_sigma(const CountsRecord &counts,
                       const std::function<double(const WeightedOutcomes &)> &statistic,
                       std::size_t resamples,
                       std::uint64_t seed) {
    std::vector<double> values;
    values.reserve(resamples);
    for (std::size_t r = 0; r < resamples; r++) {
        values.push_back(statistic(weighted_outcomes(resample(counts, seed, r))));
    }
    return sample_stddev(values);
}

ExcitationHistogram ExcitationHistogram::from(const CollectiveCounts &counts) {
    ExcitationHistogram h;
    h.shots = static_cast<double>(counts.shots());
    h.probabilities.reserve(counts.counts().size());
    for (auto c : counts.counts()) {
        h.probabilities.push_back(static_cast<double>(c) / h.shots);
    }
    return h;
}

ExcitationHistogram ExcitationHistogram::from(const CountsRecord &counts) { return from(aggregate(counts)); }

ExcitationHistogram ExcitationHistogram::exact(std::vector<double> probabilities, double shots) {
    if (probabilities.size() < 2) {
        throw InputError("Excitation histogram needs at least 2 entries");
    }
    if (!(shots > 0)) {
        throw InputError("Excitation histogram needs a positive shot count");
    }
    return ExcitationHistogram{std::move(probabilities), shots};
}

SpinMoments spin_moments(const ExcitationHistogram &data) {
    const double half_n = static_cast<double>(data.num_qubits()) / 2;
    double m1 = 0, m2 = 0, m4 = 0;
    for (std::size_t m = 0; m < data.probabilities.size(); m++) {
        double j = half_n - static_cast<double>(m);
        double w = data.probabilities[m];
        m1 += w * j;
        m2 += w * j * j;
        m4 += w * j * j * j * j;
    }
    SpinMoments result;
    result.first = Estimate{m1, std::sqrt(std::max(m2 - m1 * m1, 0.0) / data.shots)};
    result.second = Estimate{m2, std::sqrt(std::max(m4 - m2 * m2, 0.0) / data.shots)};
    return result;
}

CorrectedSpinMoments jz_moments_corrected(const ExcitationHistogram &data, double p) {
    if (!(p >= 0 && p <= 1)) {
        throw InputError("Flip probability must lie in [0, 1]");
    }
    const double s = checked_contrast(p);
    const double n = static_cast<double>(data.num_qubits());
    CorrectedSpinMoments result;
    result.measured = spin_moments(data);
    const SpinMoments &m = result.measured;
    result.corrected.first = Estimate{m.first.value / s, m.first.sigma / std::abs(s)};
    result.corrected.second = Estimate{(m.second.value - n * p * (1 - p)) / (s * s), m.second.sigma / (s * s)};
    return result;
}

CorrectedSpinMoments jz_moments_corrected(const CountsRecord &counts, double p) {
    return jz_moments_corrected(ExcitationHistogram::from(counts), p);
}

CorrectedSpinMoments jz_moments_corrected(const CollectiveCounts &counts, double p) {
    return jz_moments_corrected(ExcitationHistogram::from(counts), p);
}

SqueezingResult squeezing_corrected(const SqueezingInput &input) {
    if (input.z.num_qubits() != input.x.num_qubits()) {
        throw InputError("Z and X histograms disagree on qubit count");
    }
    const double n = static_cast<double>(input.z.num_qubits());
    const double p = input.p;
    CorrectedSpinMoments z = jz_moments_corrected(input.z, p);
    CorrectedSpinMoments x = jz_moments_corrected(input.x, p);

    const double a = z.measured.second.value;
    const double da = z.measured.second.sigma;
    const double b = x.measured.first.value;
    const double db = x.measured.first.sigma;
    if (std::abs(b) <= 1e-9 * std::max(1.0, n)) {
        throw DegenerateMeanSpinError("Mean spin <J_x> is numerically zero");
    }

    SqueezingResult r;
    r.jz2_raw = a;
    r.jx_raw = b;
    r.jz2_corrected = z.corrected.second.value;
    r.jx_corrected = x.corrected.first.value;

    const double xi2 = n * a / (b * b);
    const double xi_c2 = n * r.jz2_corrected / (r.jx_corrected * r.jx_corrected);
    const double s = 1 - 2 * p;
    const double xi_d2 = n * n * p * (1 - p) / (s * s) / (r.jx_corrected * r.jx_corrected);

    r.xi_raw = std::sqrt(std::max(xi2, 0.0));
    r.xi_d = std::sqrt(xi_d2);
    if (xi_c2 < 0) {
        r.negative_radicand = true;
        r.xi_corrected = 0;
    } else {
        r.xi_corrected = std::sqrt(xi_c2);
    }

    // xi = sqrt(n a) / |b| and xi_c = sqrt(n (a - n p (1 - p))) / |b|.
    auto propagate = [&](double xi) {
        if (xi == 0) {
            return std::numeric_limits<double>::infinity();
        }
        double d_a = n / (2 * xi * b * b) * da;
        double d_b = xi / std::abs(b) * db;
        return std::sqrt(d_a * d_a + d_b * d_b);
    };
    r.xi_raw_sigma = propagate(r.xi_raw);
    r.xi_corrected_sigma = propagate(r.xi_corrected);
    r.xi_corrected_sigma_scaled = r.xi_corrected > 0 ? r.xi_raw_sigma * r.xi_raw / r.xi_corrected
                                                     : std::numeric_limits<double>::infinity();
    return r;
}

Estimate witness_from_products(std::span<const Estimate> class_products) {
    double sum = 0;
    double var = 0;
    for (const auto &e : class_products) {
        sum += e.value;
        var += e.sigma * e.sigma;
    }
    return Estimate{3 - 2 * sum, 2 * std::sqrt(var)};
}

Estimate color_class_product(const GraphSpec &graph,
                             std::size_t class_index,
                             const WeightedOutcomes &data,
                             const DetectorModel &model) {
    DiagonalSum projector = class_projector(graph, class_index, data, model);
    return expect_diagonal(data, [&](Outcome o) { return projector.value(o); });
}

WitnessResult witness_value(const GraphSpec &graph,
                            std::span<const WeightedOutcomes> per_class,
                            const DetectorModel &model) {
    if (per_class.size() != graph.num_colors()) {
        throw InputError("Missing setting: witness needs data for " + std::to_string(graph.num_colors()) +
                         " color classes, got " + std::to_string(per_class.size()));
    }
    WitnessResult result;
    for (std::size_t l = 0; l < per_class.size(); l++) {
        result.class_products.push_back(color_class_product(graph, l, per_class[l], model));
    }
    result.witness = witness_from_products(result.class_products);
    return result;
}

WitnessResult witness_value(const GraphSpec &graph,
                            std::span<const CountsRecord> per_class,
                            const DetectorModel &model) {
    std::vector<WeightedOutcomes> data;
    data.reserve(per_class.size());
    for (const auto &c : per_class) {
        data.push_back(weighted_outcomes(c));
    }
    return witness_value(graph, data, model);
}

double witness_bootstrap_sigma(const GraphSpec &graph,
                               std::span<const CountsRecord> per_class,
                               const DetectorModel &model,
                               std::size_t resamples,
                               std::uint64_t seed) {
    if (per_class.size() != graph.num_colors()) {
        throw InputError("Missing setting for witness bootstrap");
    }
    // Resamples only revisit observed outcomes, so tabulate those once.
    std::vector<std::unordered_map<Outcome, double>> tables(per_class.size());
    for (std::size_t l = 0; l < per_class.size(); l++) {
        WeightedOutcomes data = weighted_outcomes(per_class[l]);
        DiagonalSum projector = class_projector(graph, l, data, model);
        for (const auto &[outcome, count] : per_class[l].counts()) {
            tables[l].emplace(outcome, projector.value(outcome));
        }
    }
    std::vector<double> values;
    values.reserve(resamples);
    for (std::size_t r = 0; r < resamples; r++) {
        double sum = 0;
        for (std::size_t l = 0; l < per_class.size(); l++) {
            CountsRecord re = resample(per_class[l], splitmix64(seed + l), r);
            const double shots = static_cast<double>(re.shots());
            for (const auto &[outcome, count] : re.counts()) {
                sum += tables[l].at(outcome) * static_cast<double>(count) / shots;
            }
        }
        values.push_back(3 - 2 * sum);
    }
    return sample_stddev(values);
}

CalibrationSensitivity calibration_sensitivity(std::size_t support_size, double p, double relative_error) {
    if (!(p > 0 && p < 0.5)) {
        throw InputError("Calibration sensitivity needs 0 < p < 0.5");
    }
    const double dp = p * relative_error;
    if (2 * (p + dp) >= 1) {
        throw InputError("Perturbed rate reaches 0.5");
    }
    const double np = static_cast<double>(support_size);
    CalibrationSensitivity s;
    s.leading = 2 * np * dp;
    s.first_order = 2 * np * dp / (1 - 2 * p);
    s.exact = std::pow((1 - 2 * p) / (1 - 2 * (p + dp)), np) - 1;
    return s;
}

CalibrationSensitivity calibration_sensitivity(const PauliString &obs, double p, double relative_error) {
    return calibration_sensitivity(obs.support_size(), p, relative_error);
}

}  // namespace detmit
