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

#include "detmit/experiments.h"

#include <algorithm>
#include <cmath>

#include "detmit/errors.h"
#include "detmit/rng.h"
#include "detmit/statesim.h"

namespace detmit {

namespace {

constexpr GraphKind kFigureStates[] = {GraphKind::kGhz, GraphKind::kLinearCluster};

std::uint64_t figure_stream(std::size_t state, std::size_t grid_point, std::size_t color_class) {
    return (static_cast<std::uint64_t>(state) << 40) | (static_cast<std::uint64_t>(grid_point) << 8) | color_class;
}

std::vector<CountsRecord> sample_classes(const GraphSpec &graph, const NoiseSpec &noise, const DetectorModel &model,
                                         std::uint64_t shots, std::uint64_t seed, std::size_t state,
                                         std::size_t grid_point, unsigned threads) {
    std::vector<CountsRecord> result;
    for (std::size_t l = 0; l < graph.num_colors(); l++) {
        result.push_back(sample_setting(graph, noise, color_class_setting(graph, l), model, shots, seed,
                                        figure_stream(state, grid_point, l), threads));
    }
    return result;
}

}  // namespace

std::vector<Figure1Row> figure1_experiment(const Figure1Config &config) {
    if (config.shots == 0) {
        throw InputError("Figure 1 needs at least one shot per setting");
    }
    const NoiseSpec noise{config.p_n};
    noise.validate();
    const DetectorModel model = DetectorModel::uniform(config.num_qubits, config.p, config.p);

    std::vector<Figure1Row> rows;
    for (std::size_t s = 0; s < std::size(kFigureStates); s++) {
        GraphSpec graph = build_graph(kFigureStates[s], config.num_qubits);
        std::vector<PauliString> gens = stabilizers(graph);
        std::vector<CountsRecord> records =
            sample_classes(graph, noise, model, config.shots, config.seed, s, 0, config.threads);

        std::vector<Figure1Row> state_rows;
        for (std::size_t l = 0; l < graph.num_colors(); l++) {
            const CountsRecord &counts = records[l];
            WeightedOutcomes data = weighted_outcomes(counts);
            for (std::size_t k : graph.color_class(l)) {
                const PauliString &stab = gens[k];
                Figure1Row row;
                row.state = graph_kind_name(kFigureStates[s]);
                row.k = k;
                row.support = stab.support_size();
                double support = static_cast<double>(row.support);
                row.corrected_expected = std::pow(1 - config.p_n, support);
                row.raw_expected = std::pow(1 - 2 * config.p, support) * row.corrected_expected;
                row.raw = expect_raw(data, stab);
                row.corrected = expect_corrected(data, stab, model);
                if (config.bootstrap > 0) {
                    std::uint64_t boot_seed = splitmix64(config.seed ^ figure_stream(s, 0, l));
                    row.raw_bootstrap_sigma = bootstrap_sigma(
                        counts, [&](const WeightedOutcomes &w) { return expect_raw(w, stab).value; },
                        config.bootstrap, boot_seed);
                    row.corrected_bootstrap_sigma = bootstrap_sigma(
                        counts, [&](const WeightedOutcomes &w) { return expect_corrected(w, stab, model).value; },
                        config.bootstrap, boot_seed);
                }
                state_rows.push_back(std::move(row));
            }
        }
        std::sort(state_rows.begin(), state_rows.end(),
                  [](const Figure1Row &a, const Figure1Row &b) { return a.k < b.k; });
        rows.insert(rows.end(), state_rows.begin(), state_rows.end());
    }
    return rows;
}

std::vector<double> default_p_n_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 20; i++) {
        grid.push_back(0.005 * i);
    }
    return grid;
}

ExactWitness exact_witness(const GraphSpec &graph, double p, double p_n) {
    const std::size_t n = graph.num_vertices();
    const DetectorModel model = DetectorModel::uniform(n, p, p);
    const DetectorModel ideal = DetectorModel::ideal(n);
    std::vector<Estimate> raw, corrected;
    for (std::size_t l = 0; l < graph.num_colors(); l++) {
        std::string setting = color_class_setting(graph, l);
        std::vector<double> distorted = apply_m(model, exact_setting_distribution(graph, NoiseSpec{p_n}, setting));
        WeightedOutcomes data = weighted_outcomes(n, setting, distorted, 1.0);
        raw.push_back(color_class_product(graph, l, data, ideal));
        corrected.push_back(color_class_product(graph, l, data, model));
    }
    return ExactWitness{witness_from_products(raw).value, witness_from_products(corrected).value};
}

std::vector<Figure2Row> figure2_experiment(const Figure2Config &config) {
    if (config.shots == 0) {
        throw InputError("Figure 2 needs at least one shot per setting");
    }
    const DetectorModel model = DetectorModel::uniform(config.num_qubits, config.p, config.p);
    const DetectorModel ideal = DetectorModel::ideal(config.num_qubits);

    std::vector<Figure2Row> rows;
    for (std::size_t s = 0; s < std::size(kFigureStates); s++) {
        GraphSpec graph = build_graph(kFigureStates[s], config.num_qubits);
        for (std::size_t g = 0; g < config.p_n_grid.size(); g++) {
            const NoiseSpec noise{config.p_n_grid[g]};
            noise.validate();
            std::vector<CountsRecord> records =
                sample_classes(graph, noise, model, config.shots, config.seed, s, g, config.threads);
            Figure2Row row;
            row.state = graph_kind_name(kFigureStates[s]);
            row.p_n = noise.p_n;
            row.raw = witness_value(graph, records, ideal).witness;
            row.corrected = witness_value(graph, records, model).witness;
            ExactWitness exact = exact_witness(graph, config.p, noise.p_n);
            row.raw_exact = exact.raw;
            row.corrected_exact = exact.corrected;
            if (config.bootstrap > 0) {
                std::uint64_t boot_seed = splitmix64(config.seed ^ figure_stream(s, g, 0));
                row.raw_bootstrap_sigma = witness_bootstrap_sigma(graph, records, ideal, config.bootstrap, boot_seed);
                row.corrected_bootstrap_sigma =
                    witness_bootstrap_sigma(graph, records, model, config.bootstrap, boot_seed);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace detmit
