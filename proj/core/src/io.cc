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

#include "detmit/io.h"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "detmit/bits.h"
#include "detmit/errors.h"

namespace detmit {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw InputError(std::string("Malformed JSON: ") + e.what());
    }
}

const json &require(const json &obj, const char *key) {
    if (!obj.is_object()) {
        throw InputError("Expected a JSON object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw InputError(std::string("Missing field '") + key + "'");
    }
    return *it;
}

std::uint64_t as_count(const json &value, const char *what) {
    if (value.is_number_unsigned()) {
        return value.get<std::uint64_t>();
    }
    if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
        return static_cast<std::uint64_t>(value.get<std::int64_t>());
    }
    throw InputError(std::string(what) + " must be a non-negative integer");
}

double as_number(const json &value, const char *what) {
    if (!value.is_number()) {
        throw InputError(std::string(what) + " must be a number");
    }
    return value.get<double>();
}

std::size_t as_size(const json &value, const char *what) {
    return static_cast<std::size_t>(as_count(value, what));
}

CountsRecord counts_from(const json &doc) {
    const json &counts = require(doc, "counts");
    if (!counts.is_object() || counts.empty()) {
        throw InputError("'counts' must be a non-empty object of bitstring: count");
    }
    std::size_t n;
    if (doc.contains("n")) {
        n = as_size(doc["n"], "'n'");
    } else {
        n = counts.begin().key().size();
    }
    std::string setting;
    if (doc.contains("setting")) {
        if (!doc["setting"].is_string()) {
            throw InputError("'setting' must be a string");
        }
        setting = doc["setting"].get<std::string>();
    }
    std::map<Outcome, std::uint64_t> table;
    for (auto it = counts.begin(); it != counts.end(); ++it) {
        Outcome o = parse_bitstring(it.key(), n);
        table[o] += as_count(it.value(), "Count");
    }
    return CountsRecord(n, std::move(setting), std::move(table));
}

json counts_json(const CountsRecord &counts) {
    json table = json::object();
    for (const auto &[outcome, count] : counts.counts()) {
        table[format_bitstring(outcome, counts.num_qubits())] = count;
    }
    return json{{"n", counts.num_qubits()}, {"setting", counts.setting()}, {"counts", std::move(table)}};
}

json model_json(const DetectorModel &model, const CalibrationResult *result) {
    json qubits = json::array();
    for (std::size_t k = 0; k < model.num_qubits(); k++) {
        const Rates &r = model.rates(k);
        json q{{"p0", r.p0}, {"p1", r.p1}};
        if (result != nullptr) {
            q["p0_sigma"] = result->sigmas[k].p0;
            q["p1_sigma"] = result->sigmas[k].p1;
            q["p0_shots"] = result->support[k][0];
            q["p1_shots"] = result->support[k][1];
        }
        qubits.push_back(std::move(q));
    }
    return json{{"schema_version", kSchemaVersion}, {"n", model.num_qubits()}, {"qubits", std::move(qubits)}};
}

void check_schema(const json &doc) {
    if (doc.contains("schema_version")) {
        std::uint64_t v = as_count(doc["schema_version"], "'schema_version'");
        if (v != static_cast<std::uint64_t>(kSchemaVersion)) {
            throw InputError("Unsupported schema_version " + std::to_string(v));
        }
    }
}

}  // namespace

CountsRecord parse_counts(std::string_view text) {
    return counts_from(parse_json(text));
}

std::string counts_to_json(const CountsRecord &counts) {
    return counts_json(counts).dump(2) + "\n";
}

CalibrationRun parse_calibration_run(std::string_view text) {
    json doc = parse_json(text);
    CountsRecord counts = counts_from(doc);
    const json &prepared = require(doc, "prepared");
    if (!prepared.is_string()) {
        throw InputError("'prepared' must be a bitstring");
    }
    Outcome state = parse_bitstring(prepared.get<std::string>(), counts.num_qubits());
    return CalibrationRun{state, std::move(counts)};
}

std::string calibration_run_to_json(const CalibrationRun &run) {
    json doc = counts_json(run.counts);
    doc["prepared"] = format_bitstring(run.prepared, run.counts.num_qubits());
    return doc.dump(2) + "\n";
}

DetectorModel parse_model(std::string_view text) {
    json doc = parse_json(text);
    check_schema(doc);
    const json &qubits = require(doc, "qubits");
    if (!qubits.is_array() || qubits.empty()) {
        throw InputError("'qubits' must be a non-empty array");
    }
    if (doc.contains("n") && as_size(doc["n"], "'n'") != qubits.size()) {
        throw InputError("'n' does not match the number of qubit entries");
    }
    std::vector<Rates> rates;
    for (const json &q : qubits) {
        rates.push_back(Rates{as_number(require(q, "p0"), "'p0'"), as_number(require(q, "p1"), "'p1'")});
    }
    return DetectorModel(std::move(rates));
}

std::string model_to_json(const DetectorModel &model) {
    return model_json(model, nullptr).dump(2) + "\n";
}

std::string model_to_json(const CalibrationResult &result) {
    return model_json(result.model, &result).dump(2) + "\n";
}

CollectiveCounts parse_collective_counts(std::string_view text) {
    json doc = parse_json(text);
    if (doc.is_object()) {
        check_schema(doc);
        doc = require(doc, "counts");
    }
    if (!doc.is_array()) {
        throw InputError("Collective counts must be an array [c_0, ..., c_n]");
    }
    std::vector<std::uint64_t> counts;
    for (const json &c : doc) {
        counts.push_back(as_count(c, "Count"));
    }
    return CollectiveCounts(std::move(counts));
}

std::string collective_counts_to_json(const CollectiveCounts &counts) {
    return json(counts.counts()).dump() + "\n";
}

GraphSpec parse_graph(std::string_view text) {
    json doc = parse_json(text);
    std::size_t n = as_size(require(doc, "n"), "'n'");
    std::vector<Edge> edges;
    const json &edge_list = require(doc, "edges");
    if (!edge_list.is_array()) {
        throw InputError("'edges' must be an array of pairs");
    }
    for (const json &e : edge_list) {
        if (!e.is_array() || e.size() != 2) {
            throw InputError("Each edge must be a pair [a, b]");
        }
        edges.emplace_back(as_size(e[0], "Vertex"), as_size(e[1], "Vertex"));
    }
    std::vector<int> coloring;
    const json &colors = require(doc, "coloring");
    if (!colors.is_array()) {
        throw InputError("'coloring' must be an array");
    }
    for (const json &c : colors) {
        coloring.push_back(static_cast<int>(as_count(c, "Color")));
    }
    return GraphSpec(n, std::move(edges), std::move(coloring));
}

std::string graph_to_json(const GraphSpec &graph) {
    json edges = json::array();
    for (const Edge &e : graph.edges()) {
        edges.push_back({e.first, e.second});
    }
    json doc{{"n", graph.num_vertices()}, {"edges", std::move(edges)}, {"coloring", graph.coloring()}};
    return doc.dump(2) + "\n";
}

std::string distribution_to_json(const DistributionReport &report) {
    if (report.distribution == nullptr) {
        throw InputError("No distribution to serialize");
    }
    const Distribution &d = *report.distribution;
    std::vector<std::size_t> clamped;
    for (std::size_t i = 0; i < d.clamped.size(); i++) {
        if (d.clamped[i]) {
            clamped.push_back(i);
        }
    }
    json doc{{"schema_version", kSchemaVersion},
             {"values", d.values},
             {"sigmas", d.sigmas},
             {"shots", d.shots},
             {"clamped", clamped}};
    if (report.condition_number) {
        doc["condition_number"] = *report.condition_number;
    }
    if (report.projected) {
        doc["projected"] = *report.projected;
    }
    return doc.dump(2) + "\n";
}

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string figure1_csv(const std::vector<Figure1Row> &rows) {
    std::ostringstream out;
    out << "state,k,support,raw,raw_sigma,raw_bootstrap_sigma,raw_expected,"
           "corrected,corrected_sigma,corrected_bootstrap_sigma,corrected_expected\n";
    for (const Figure1Row &r : rows) {
        out << r.state << ',' << r.k << ',' << r.support << ',' << format_double(r.raw.value) << ','
            << format_double(r.raw.sigma) << ',' << format_double(r.raw_bootstrap_sigma) << ','
            << format_double(r.raw_expected) << ',' << format_double(r.corrected.value) << ','
            << format_double(r.corrected.sigma) << ',' << format_double(r.corrected_bootstrap_sigma) << ','
            << format_double(r.corrected_expected) << '\n';
    }
    return out.str();
}

std::string figure2_csv(const std::vector<Figure2Row> &rows) {
    std::ostringstream out;
    out << "state,p_n,raw,raw_sigma,raw_bootstrap_sigma,raw_exact,"
           "corrected,corrected_sigma,corrected_bootstrap_sigma,corrected_exact\n";
    for (const Figure2Row &r : rows) {
        out << r.state << ',' << format_double(r.p_n) << ',' << format_double(r.raw.value) << ','
            << format_double(r.raw.sigma) << ',' << format_double(r.raw_bootstrap_sigma) << ','
            << format_double(r.raw_exact) << ',' << format_double(r.corrected.value) << ','
            << format_double(r.corrected.sigma) << ',' << format_double(r.corrected_bootstrap_sigma) << ','
            << format_double(r.corrected_exact) << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("Cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string &path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("Cannot write '" + path + "'");
    }
    out << content;
    if (!out) {
        throw InputError("Failed writing '" + path + "'");
    }
}

}  // namespace detmit
