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

#include "gtest/gtest.h"

#include "detmit/errors.h"
#include "detmit/experiments.h"
#include "detmit/statesim.h"
#include "oracles.h"

using namespace detmit;

namespace {

/// Exact distorted distribution as weighted outcomes (no shot noise).
WeightedOutcomes exact_data(const DetectorModel &model, const std::vector<double> &g, std::string setting = "") {
    return weighted_outcomes(model.num_qubits(), std::move(setting), apply_m(model, g), 1000);
}

PauliString random_z_string(oracle::Rng &rng, std::size_t n) {
    std::vector<Pauli> f;
    for (std::size_t k = 0; k < n; k++) {
        f.push_back(rng() % 2 ? Pauli::Z : Pauli::I);
    }
    return PauliString(f);
}

}  // namespace

TEST(Observables, expect_raw_examples) {
    CountsRecord zeros(4, "", {{0, 100}});
    Estimate e = expect_raw(zeros, PauliString::parse("ZZZZ"));
    ASSERT_EQ(e.value, 1);
    ASSERT_EQ(e.sigma, 0);

    CountsRecord flat(2, "", {{0, 25}, {1, 25}, {2, 25}, {3, 25}});
    for (const char *obs : {"ZI", "IZ", "ZZ"}) {
        Estimate u = expect_raw(flat, PauliString::parse(obs));
        ASSERT_NEAR(u.value, 0, 1e-15);
        ASSERT_NEAR(u.sigma, 0.1, 1e-15);
    }

    CountsRecord mixed(1, "", {{0, 30}, {1, 10}});
    Estimate m = expect_raw(mixed, PauliString::parse("Z"));
    ASSERT_NEAR(m.value, 0.5, 1e-15);
    ASSERT_NEAR(m.sigma, std::sqrt((1 - 0.25) / 40), 1e-15);
}

TEST(Observables, setting_mismatch) {
    CountsRecord x(2, "XZ", {{0, 10}});
    ASSERT_THROW(expect_raw(x, PauliString::parse("ZZ")), InputError);
    ASSERT_NO_THROW(expect_raw(x, PauliString::parse("XZ")));
    ASSERT_NO_THROW(expect_raw(x, PauliString::parse("IZ")));
    ASSERT_THROW(expect_raw(x, PauliString::parse("ZZZ")), InputError);
}

TEST(Observables, correction_factor) {
    ASSERT_EQ(correction_factor(PauliString::parse("ZZ"), DetectorModel::ideal(2)), 1);
    ASSERT_NEAR(correction_factor(PauliString::parse("ZZ"), DetectorModel::uniform(2, 0.03, 0.03)), 1.131734,
                1e-6);
    ASSERT_NEAR(correction_factor(PauliString::parse("XZZZZZZZZZ"), DetectorModel::uniform(10, 0.03, 0.03)),
                1.8566133, 1e-6);
    ASSERT_THROW(correction_factor(PauliString::parse("Z"), DetectorModel::uniform(1, 0.1, 0.2)), InputError);
    ASSERT_THROW(correction_factor(PauliString::parse("Z"), DetectorModel::uniform(1, 0.5, 0.5)),
                 SingularModelError);
}

TEST(Observables, property_factor_depends_only_on_support) {
    oracle::Rng rng(40);
    for (int trial = 0; trial < 50; trial++) {
        std::size_t n = 1 + trial % 8;
        double p = oracle::uniform(rng, 0, 0.3);
        DetectorModel m = DetectorModel::uniform(n, p, p);
        std::vector<Pauli> f;
        for (std::size_t k = 0; k < n; k++) {
            f.push_back(static_cast<Pauli>(rng() % 4));
        }
        PauliString s(f);
        ASSERT_NEAR(correction_factor(s, m), std::pow(1 - 2 * p, -static_cast<double>(s.support_size())), 1e-12);
    }
}

TEST(Observables, corrected_single_qubit_by_hand) {
    WeightedOutcomes data = weighted_outcomes(1, "", std::vector<double>{0.9, 0.1}, 100);
    Estimate e = expect_corrected(data, PauliString::parse("Z"), DetectorModel::uniform(1, 0.1, 0.2));
    ASSERT_NEAR(e.value, 1.0, 1e-14);
}

TEST(Observables, perfect_detector_corrected_equals_raw) {
    CountsRecord c(3, "", {{0, 11}, {5, 4}, {6, 7}});
    PauliString s = PauliString::parse("ZIZ");
    Estimate a = expect_raw(c, s), b = expect_corrected(c, s, DetectorModel::ideal(3));
    ASSERT_DOUBLE_EQ(a.value, b.value);
    ASSERT_DOUBLE_EQ(a.sigma, b.sigma);
}

TEST(Observables, uniform_correction_is_scalar_multiple) {
    CountsRecord c(3, "", {{0, 11}, {5, 4}, {6, 7}, {7, 3}});
    PauliString s = PauliString::parse("ZZZ");
    DetectorModel m = DetectorModel::uniform(3, 0.04, 0.04);
    double scale = correction_factor(s, m);
    Estimate a = expect_raw(c, s), b = expect_corrected(c, s, m);
    ASSERT_NEAR(b.value, scale * a.value, 1e-14);
    ASSERT_NEAR(b.sigma, scale * a.sigma, 1e-14);
}

TEST(Observables, identity_observable_is_one) {
    oracle::Rng rng(41);
    for (std::size_t n = 1; n <= 5; n++) {
        DetectorModel m = oracle::random_model(rng, n, 0, 0.4);
        WeightedOutcomes data = exact_data(m, oracle::random_distribution(rng, outcome_count(n)));
        ASSERT_NEAR(expect_corrected(data, PauliString::identity(n), m).value, 1.0, 1e-14);
    }
}

TEST(Observables, property_exact_on_exact_data) {
    oracle::Rng rng(42);
    for (int trial = 0; trial < 60; trial++) {
        std::size_t n = 1 + trial % 6;
        DetectorModel m = oracle::random_model(rng, n);
        std::vector<double> g = oracle::random_distribution(rng, outcome_count(n));
        PauliString s = random_z_string(rng, n);
        double truth = 0;
        for (Outcome i = 0; i < g.size(); i++) {
            truth += g[i] * ((hamming_weight(i & s.support_mask()) % 2) ? -1.0 : 1.0);
        }
        ASSERT_NEAR(expect_corrected(exact_data(m, g), s, m).value, truth, 1e-10) << s.str();
    }
}

TEST(Observables, ghz_stabilizers_scale_with_support) {
    GraphSpec g = build_graph(GraphKind::kGhz, 10);
    DetectorModel m = DetectorModel::uniform(10, 0.03, 0.03);
    std::vector<PauliString> gens = stabilizers(g);
    CountsRecord leaves = sample_setting(g, NoiseSpec{0}, color_class_setting(g, 1), m, 5000, 7, 1);
    Estimate leaf = expect_raw(leaves, gens[1]);
    ASSERT_NEAR(leaf.value, 0.8836, 3 * leaf.sigma);
    // Nine correlated comparisons: 3.5 sigma keeps the family-wise rate near 0.4%.
    for (std::size_t k = 1; k < 10; k++) {
        Estimate raw = expect_raw(leaves, gens[k]);
        ASSERT_NEAR(raw.value, 0.8836, 3.5 * raw.sigma) << k;
        Estimate c = expect_corrected(leaves, gens[k], m);
        ASSERT_NEAR(c.value, 1.0, 3.5 * c.sigma) << k;
    }
    // Exact distorted data: the center stabilizer corrects to exactly 1.
    std::string center = color_class_setting(g, 0);
    WeightedOutcomes exact = weighted_outcomes(10, center, apply_m(m, exact_setting_distribution(g, NoiseSpec{0}, center)), 1);
    ASSERT_NEAR(expect_raw(exact, gens[0]).value, std::pow(0.94, 10), 1e-12);
    ASSERT_NEAR(expect_corrected(exact, gens[0], m).value, 1.0, 1e-12);
}

TEST(Observables, bootstrap_matches_analytic_sigma) {
    CountsRecord c(2, "", {{0, 400}, {1, 100}, {2, 150}, {3, 350}});
    PauliString s = PauliString::parse("ZZ");
    Estimate e = expect_raw(c, s);
    double boot = bootstrap_sigma(
        c, [&](const WeightedOutcomes &w) { return expect_raw(w, s).value; }, 400, 3);
    ASSERT_NEAR(boot / e.sigma, 1.0, 0.15);
    double again = bootstrap_sigma(
        c, [&](const WeightedOutcomes &w) { return expect_raw(w, s).value; }, 400, 3);
    ASSERT_EQ(boot, again);
}

TEST(Observables, spin_moments_conventions) {
    // Two qubits, outcome weights m = 0, 1, 2 map to J = 1, 0, -1.
    ExcitationHistogram h = ExcitationHistogram::exact({0.5, 0.25, 0.25}, 100);
    SpinMoments s = spin_moments(h);
    ASSERT_NEAR(s.first.value, 0.5 - 0.25, 1e-15);
    ASSERT_NEAR(s.second.value, 0.5 + 0.25, 1e-15);
    ASSERT_NEAR(s.first.sigma, std::sqrt((0.75 - 0.0625) / 100), 1e-15);
    ASSERT_THROW(ExcitationHistogram::exact({1.0}, 10), InputError);
}

TEST(Observables, jz_moments_p_zero_unchanged) {
    ExcitationHistogram h = ExcitationHistogram::exact({0.1, 0.2, 0.3, 0.4}, 50);
    CorrectedSpinMoments c = jz_moments_corrected(h, 0);
    ASSERT_DOUBLE_EQ(c.corrected.first.value, c.measured.first.value);
    ASSERT_DOUBLE_EQ(c.corrected.second.value, c.measured.second.value);
}

TEST(Observables, jz_moments_all_down_exact) {
    for (std::size_t n : {1, 2, 7, 30}) {
        const double p = 0.05;
        std::vector<double> hist(n + 1);
        for (std::size_t m = 0; m <= n; m++) {
            hist[m] = std::tgamma(n + 1.0) / (std::tgamma(m + 1.0) * std::tgamma(n - m + 1.0)) * std::pow(p, m) *
                      std::pow(1 - p, n - m);
        }
        CorrectedSpinMoments c = jz_moments_corrected(ExcitationHistogram::exact(hist, 1000), p);
        double nd = static_cast<double>(n);
        ASSERT_NEAR(c.measured.second.value, nd * p * (1 - p) + (1 - 2 * p) * (1 - 2 * p) * nd * nd / 4, 1e-10);
        ASSERT_NEAR(c.corrected.second.value, nd * nd / 4, 1e-10);
        ASSERT_NEAR(c.corrected.first.value, nd / 2, 1e-10);
    }
}

TEST(Observables, jz_moments_antialigned_pair_is_zero) {
    for (double p : {0.0, 0.1, 0.3}) {
        DetectorModel m = DetectorModel::uniform(2, p, p);
        std::vector<double> g{0, 0, 0, 0};
        g[parse_bitstring("01", 2)] = 1;
        std::vector<double> f = apply_m(m, g);
        ExcitationHistogram h = ExcitationHistogram::exact({f[0], f[1] + f[2], f[3]}, 1);
        ASSERT_NEAR(jz_moments_corrected(h, p).corrected.first.value, 0.0, 1e-15);
    }
    ASSERT_THROW(jz_moments_corrected(ExcitationHistogram::exact({0.5, 0.5}, 10), 0.5), SingularModelError);
}

TEST(Observables, jz_individual_equals_collective) {
    oracle::Rng rng(43);
    std::map<Outcome, std::uint64_t> table;
    for (int i = 0; i < 200; i++) {
        table[rng() % 32] += 1 + rng() % 5;
    }
    CountsRecord c(5, "", table);
    CorrectedSpinMoments a = jz_moments_corrected(c, 0.07);
    CorrectedSpinMoments b = jz_moments_corrected(aggregate(c), 0.07);
    ASSERT_EQ(a.corrected.first.value, b.corrected.first.value);
    ASSERT_EQ(a.corrected.second.value, b.corrected.second.value);
    ASSERT_EQ(a.corrected.second.sigma, b.corrected.second.sigma);
}

TEST(Observables, calibration_sensitivity_examples) {
    CalibrationSensitivity zero = calibration_sensitivity(3, 0.03, 0.0);
    ASSERT_EQ(zero.first_order, 0);
    ASSERT_NEAR(zero.exact, 0, 1e-15);

    CalibrationSensitivity s = calibration_sensitivity(PauliString::parse("ZZ"), 0.03, 0.1);
    ASSERT_NEAR(s.first_order, 2 * 2 * 0.003 / 0.94, 1e-15);
    ASSERT_NEAR(s.first_order, 0.01277, 1e-5);
    ASSERT_NEAR(s.leading, 0.012, 1e-15);
    ASSERT_NEAR(s.exact, std::pow(0.94 / (1 - 0.066), 2) - 1, 1e-15);

    ASSERT_THROW(calibration_sensitivity(2, 0.0, 0.1), InputError);
    ASSERT_THROW(calibration_sensitivity(2, 0.5, 0.1), InputError);
}

TEST(Observables, calibration_sensitivity_first_order_in_e) {
    // exact / first_order -> 1 as e -> 0.
    for (std::size_t np : {1, 3, 10}) {
        double prev = 1e9;
        for (double e : {0.1, 0.01, 0.001}) {
            CalibrationSensitivity s = calibration_sensitivity(np, 0.03, e);
            double gap = std::abs(s.exact / s.first_order - 1);
            ASSERT_LT(gap, prev);
            prev = gap;
        }
        ASSERT_LT(prev, 1e-3);
    }
}

TEST(Observables, calibration_sensitivity_sweep) {
    // First-order estimate within 20% of the exact perturbation whenever it
    // is at most 0.1, over detectors with p <= 0.1.
    for (std::size_t np = 1; np <= 10; np++) {
        for (double p = 0.005; p <= 0.1 + 1e-12; p += 0.005) {
            for (double e = -0.5; e <= 0.5 + 1e-12; e += 0.01) {
                if (std::abs(e) < 1e-12) {
                    continue;
                }
                CalibrationSensitivity s = calibration_sensitivity(np, p, e);
                if (std::abs(2 * np * p * e) >= 0.1) {
                    continue;
                }
                ASSERT_NEAR(s.first_order / s.exact, 1.0, 0.2) << np << " " << p << " " << e;
            }
        }
    }
}
