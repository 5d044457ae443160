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

#ifndef DETMIT_IO_H
#define DETMIT_IO_H

// File formats. All parse functions throw InputError on malformed input.
//
// Counts:       {"n": 3, "setting": "XZZ", "counts": {"010": 12, ...}}
//               bitstrings qubit-0 leftmost; "setting" optional (all Z).
// Calibration:  a counts object plus "prepared": "<bitstring>".
// Model:        {"schema_version": 1, "n": 2,
//                "qubits": [{"p0": .., "p1": .., "p0_sigma": .., ...}, ...]}
// Collective:   [c_0, c_1, ..., c_n]
// Graph:        {"n": 3, "edges": [[0, 1], [0, 2]], "coloring": [0, 1, 1]}
// Distribution: {"schema_version": 1, "values": [..], "sigmas": [..],
//                "shots": N, "clamped": [indices]}

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "detmit/collective.h"
#include "detmit/counts.h"
#include "detmit/detector_model.h"
#include "detmit/experiments.h"
#include "detmit/graph.h"
#include "detmit/observables.h"
#include "detmit/reconstruct.h"

namespace detmit {

inline constexpr int kSchemaVersion = 1;

CountsRecord parse_counts(std::string_view json);
std::string counts_to_json(const CountsRecord &counts);

CalibrationRun parse_calibration_run(std::string_view json);
std::string calibration_run_to_json(const CalibrationRun &run);

DetectorModel parse_model(std::string_view json);
std::string model_to_json(const DetectorModel &model);
std::string model_to_json(const CalibrationResult &result);

CollectiveCounts parse_collective_counts(std::string_view json);
std::string collective_counts_to_json(const CollectiveCounts &counts);

GraphSpec parse_graph(std::string_view json);
std::string graph_to_json(const GraphSpec &graph);

struct DistributionReport {
    const Distribution *distribution = nullptr;
    /// Present for collective unfolding.
    std::optional<double> condition_number;
    /// Present when simplex projection was requested.
    std::optional<std::vector<double>> projected;
};
std::string distribution_to_json(const DistributionReport &report);

/// 17 significant digits; round-trips doubles.
std::string format_double(double value);

/// state,k,support,raw,raw_sigma,raw_bootstrap_sigma,raw_expected,
/// corrected,corrected_sigma,corrected_bootstrap_sigma,corrected_expected
std::string figure1_csv(const std::vector<Figure1Row> &rows);

/// state,p_n,raw,raw_sigma,raw_bootstrap_sigma,raw_exact,
/// corrected,corrected_sigma,corrected_bootstrap_sigma,corrected_exact
std::string figure2_csv(const std::vector<Figure2Row> &rows);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, std::string_view content);

}  // namespace detmit

#endif
