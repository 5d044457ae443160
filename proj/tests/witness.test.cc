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

#include <cmath>

#include "gtest/gtest.h"

#include "detmit/errors.h"
#include "detmit/experiments.h"
#include "detmit/observables.h"
#include "detmit/statesim.h"
#include "oracles.h"

using namespace detmit;

namespace {

std::vector<WeightedOutcomes> exact_settings(const GraphSpec &g, double p_n, const DetectorModel &m) {
    std::vector<WeightedOutcomes> out;
    for (std::size_t l = 0; l < g.num_colors(); l++) {
        std::string s = color_class_setting(g, l);
        out.push_back(weighted_outcomes(g.num_vertices(), s, apply_m(m, exact_setting_distribution(g, NoiseSpec{p_n}, s)), 5000));
    }
    return out;
}

}  // namespace

TEST(Witness, ideal_state_perfect_detectors) {
    for (GraphKind kind : {GraphKind::kGhz, GraphKind::kLinearCluster}) {
        GraphSpec g = build_graph(kind, 10);
        DetectorModel ideal = DetectorModel::ideal(10);
        ASSERT_NEAR(witness_value(g, exact_settings(g, 0, ideal), ideal).witness.value, -1, 1e-12);
    }
}

TEST(Witness, corrected_is_exact_on_exact_data) {
    for (GraphKind kind : {GraphKind::kGhz, GraphKind::kLinearCluster}) {
        GraphSpec g = build_graph(kind, 10);
        DetectorModel m = DetectorModel::uniform(10, 0.03, 0.03);
        ASSERT_NEAR(witness_value(g, exact_settings(g, 0, m), m).witness.value, -1, 1e-8);
    }
}

TEST(Witness, raw_matches_closed_form) {
    // Raw GHZ_10 at p = 0.03 sits slightly below zero in the infinite-shot
    // limit (about -0.0135); LC_10 sits above.
    for (GraphKind kind : {GraphKind::kGhz, GraphKind::kLinearCluster}) {
        GraphSpec g = build_graph(kind, 10);
        DetectorModel m = DetectorModel::uniform(10, 0.03, 0.03);
        double raw = witness_value(g, exact_settings(g, 0, m), DetectorModel::ideal(10)).witness.value;
        ASSERT_NEAR(raw, oracle::closed_form_witness(g, 0, 0.03), 1e-10);
        ASSERT_NEAR(exact_witness(g, 0.03, 0).raw, raw, 1e-12);
    }
    ASSERT_NEAR(oracle::closed_form_witness(build_graph(GraphKind::kGhz, 10), 0, 0.03), -0.013463, 1e-6);
    ASSERT_NEAR(oracle::closed_form_witness(build_graph(GraphKind::kLinearCluster, 10), 0, 0.03), 0.047034, 1e-6);
}

TEST(Witness, property_corrected_equals_dense_trace) {
    for (GraphKind kind : {GraphKind::kGhz, GraphKind::kLinearCluster}) {
        for (std::size_t n = 2; n <= 6; n++) {
            GraphSpec g = build_graph(kind, n);
            for (double p_n : {0.0, 0.04, 0.1}) {
                oracle::CMatrix rho = oracle::dense_depolarize(oracle::dense_graph_state(g), n, p_n);
                double truth = oracle::dense_witness(g, rho);
                DetectorModel m = DetectorModel({{0.02, 0.05}, {0.04, 0.01}, {0.03, 0.03}, {0.0, 0.06},
                                                 {0.05, 0.02}, {0.01, 0.04}});
                m = DetectorModel(std::vector<Rates>(m.per_qubit().begin(), m.per_qubit().begin() + n));
                ASSERT_NEAR(witness_value(g, exact_settings(g, p_n, m), m).witness.value, truth, 1e-8)
                    << n << " " << p_n;
            }
        }
    }
}

TEST(Witness, property_corrected_equals_closed_form_up_to_ten) {
    for (GraphKind kind : {GraphKind::kGhz, GraphKind::kLinearCluster}) {
        for (std::size_t n = 7; n <= 10; n++) {
            GraphSpec g = build_graph(kind, n);
            DetectorModel m = DetectorModel::uniform(n, 0.03, 0.03);
            for (double p_n : {0.02, 0.05}) {
                ASSERT_NEAR(witness_value(g, exact_settings(g, p_n, m), m).witness.value,
                            oracle::closed_form_witness(g, p_n), 1e-8);
            }
        }
    }
}

TEST(Witness, three_colors) {
    GraphSpec g(3, {{0, 1}, {1, 2}, {0, 2}}, {0, 1, 2});
    DetectorModel m = DetectorModel::uniform(3, 0.02, 0.04);
    oracle::CMatrix rho = oracle::dense_depolarize(oracle::dense_graph_state(g), 3, 0.03);
    ASSERT_NEAR(witness_value(g, exact_settings(g, 0.03, m), m).witness.value, oracle::dense_witness(g, rho), 1e-10);
}

TEST(Witness, missing_or_wrong_settings) {
    GraphSpec g = build_graph(GraphKind::kGhz, 4);
    DetectorModel m = DetectorModel::ideal(4);
    std::vector<WeightedOutcomes> data = exact_settings(g, 0, m);
    std::vector<WeightedOutcomes> one(data.begin(), data.begin() + 1);
    ASSERT_THROW(witness_value(g, one, m), InputError);
    std::swap(data[0], data[1]);
    ASSERT_THROW(witness_value(g, data, m), InputError);
}

TEST(Witness, sigma_matches_repetition_spread) {
    GraphSpec g = build_graph(GraphKind::kLinearCluster, 4);
    DetectorModel m = DetectorModel::uniform(4, 0.05, 0.05);
    const int reps = 300;
    double sum = 0, sq = 0, sigma = 0;
    for (int r = 0; r < reps; r++) {
        std::vector<CountsRecord> records;
        for (std::size_t l = 0; l < 2; l++) {
            records.push_back(sample_setting(g, NoiseSpec{0.02}, color_class_setting(g, l), m, 500, 100 + r, l));
        }
        Estimate w = witness_value(g, records, m).witness;
        sum += w.value;
        sq += w.value * w.value;
        sigma += w.sigma / reps;
    }
    double mean = sum / reps;
    double sd = std::sqrt(sq / reps - mean * mean);
    ASSERT_NEAR(sigma / sd, 1.0, 0.15);
    ASSERT_NEAR(mean, oracle::closed_form_witness(g, 0.02), 3 * sd / std::sqrt(reps));
}

TEST(Witness, bootstrap_close_to_analytic) {
    GraphSpec g = build_graph(GraphKind::kGhz, 6);
    DetectorModel m = DetectorModel::uniform(6, 0.03, 0.03);
    std::vector<CountsRecord> records;
    for (std::size_t l = 0; l < 2; l++) {
        records.push_back(sample_setting(g, NoiseSpec{0}, color_class_setting(g, l), m, 2000, 9, l));
    }
    Estimate w = witness_value(g, records, m).witness;
    double boot = witness_bootstrap_sigma(g, records, m, 300, 4);
    ASSERT_NEAR(boot / w.sigma, 1.0, 0.2);
}
