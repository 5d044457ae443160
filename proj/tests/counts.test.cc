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

#include "detmit/counts.h"

#include <cmath>

#include "gtest/gtest.h"

#include "detmit/errors.h"

using namespace detmit;

TEST(Counts, normalize_setting) {
    ASSERT_EQ(normalize_setting("", 3), "ZZZ");
    ASSERT_EQ(normalize_setting("xyz", 3), "XYZ");
    ASSERT_THROW(normalize_setting("XX", 3), InputError);
    ASSERT_THROW(normalize_setting("XQZ", 3), InputError);
}

TEST(Counts, record_basics) {
    CountsRecord r(2, "", {{0, 10}, {3, 5}, {1, 0}});
    ASSERT_EQ(r.shots(), 15u);
    ASSERT_EQ(r.setting(), "ZZ");
    ASSERT_EQ(r.count(3), 5u);
    ASSERT_EQ(r.count(1), 0u);
    ASSERT_EQ(r.counts().size(), 2u);
}

TEST(Counts, record_errors) {
    ASSERT_THROW(CountsRecord(2, "", {}), InputError);
    ASSERT_THROW(CountsRecord(2, "", {{0, 0}}), InputError);
    ASSERT_THROW(CountsRecord(2, "", {{4, 1}}), InputError);
    ASSERT_THROW(CountsRecord(0, "", {{0, 1}}), InputError);
}

TEST(Counts, tally) {
    std::vector<Outcome> shots{0, 1, 1, 3, 3, 3};
    CountsRecord r = tally(2, "XZ", shots);
    ASSERT_EQ(r.count(0), 1u);
    ASSERT_EQ(r.count(1), 2u);
    ASSERT_EQ(r.count(3), 3u);
    ASSERT_EQ(r.setting(), "XZ");
}

TEST(Counts, aggregate_by_weight) {
    CountsRecord r(3, "", {{0b000, 4}, {0b001, 2}, {0b110, 3}, {0b111, 1}});
    CollectiveCounts c = aggregate(r);
    ASSERT_EQ(c.num_qubits(), 3u);
    ASSERT_EQ(c.counts(), (std::vector<std::uint64_t>{4, 2, 3, 1}));
    ASSERT_EQ(c.shots(), 10u);
}

TEST(Counts, collective_errors) {
    ASSERT_THROW(CollectiveCounts({5}), InputError);
    ASSERT_THROW(CollectiveCounts({0, 0, 0}), InputError);
}

TEST(Counts, weighted_outcomes_are_frequencies) {
    CountsRecord r(2, "ZX", {{0, 30}, {2, 10}});
    WeightedOutcomes w = weighted_outcomes(r);
    ASSERT_EQ(w.setting, "ZX");
    ASSERT_EQ(w.shots, 40.0);
    double total = 0;
    for (const auto &[o, p] : w.entries) {
        total += p;
        if (o == 0) {
            ASSERT_DOUBLE_EQ(p, 0.75);
        }
    }
    ASSERT_DOUBLE_EQ(total, 1.0);
}

TEST(Counts, resample_is_deterministic_and_preserves_shots) {
    CountsRecord r(3, "", {{0, 100}, {5, 50}, {7, 850}});
    CountsRecord a = resample(r, 11, 3);
    CountsRecord b = resample(r, 11, 3);
    CountsRecord c = resample(r, 11, 4);
    ASSERT_EQ(a, b);
    ASSERT_EQ(a.shots(), r.shots());
    ASSERT_FALSE(a == c);
    for (const auto &[o, n] : a.counts()) {
        ASSERT_TRUE(r.count(o) > 0) << o;
        (void)n;
    }
}

TEST(Counts, resample_mean_matches_frequencies) {
    CountsRecord r(1, "", {{0, 300}, {1, 700}});
    double sum = 0;
    const int reps = 400;
    for (int i = 0; i < reps; i++) {
        sum += static_cast<double>(resample(r, 5, i).count(1));
    }
    // Binomial(1000, 0.7) sd = 14.5; mean of 400 has sd 0.72.
    ASSERT_NEAR(sum / reps, 700, 4);
}
