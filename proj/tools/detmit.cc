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

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "detmit/collective.h"
#include "detmit/counts.h"
#include "detmit/detector_model.h"
#include "detmit/errors.h"
#include "detmit/experiments.h"
#include "detmit/graph.h"
#include "detmit/io.h"
#include "detmit/observables.h"
#include "detmit/reconstruct.h"

namespace {

using namespace detmit;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitSingular = 3;
constexpr int kExitResource = 4;

struct ModelFlags {
    std::optional<double> p;
    std::optional<double> p0;
    std::optional<double> p1;
    std::string rates;
    std::string model_path;

    void attach(CLI::App *cmd) {
        cmd->add_option("--p", p, "Symmetric flip rate p0 = p1 = p on every qubit");
        cmd->add_option("--p0", p0, "Rate of reading 0 as 1 (with --p1)");
        cmd->add_option("--p1", p1, "Rate of reading 1 as 0 (with --p0)");
        cmd->add_option("--rates", rates, "Per-qubit rates 'p0:p1,p0:p1,...' (qubit 0 first)");
        cmd->add_option("--model", model_path, "Model JSON written by 'calibrate'");
    }

    bool any() const { return p || p0 || p1 || !rates.empty() || !model_path.empty(); }

    DetectorModel resolve(std::size_t n) const {
        int sources = (p ? 1 : 0) + ((p0 || p1) ? 1 : 0) + (rates.empty() ? 0 : 1) + (model_path.empty() ? 0 : 1);
        if (sources != 1) {
            throw InputError("Give exactly one model source: --p, --p0/--p1, --rates, or --model");
        }
        if (p) {
            return DetectorModel::uniform(n, *p, *p);
        }
        if (p0 || p1) {
            if (!(p0 && p1)) {
                throw InputError("--p0 and --p1 must be given together");
            }
            return DetectorModel::uniform(n, *p0, *p1);
        }
        DetectorModel model = model_path.empty() ? parse_rates() : parse_model(read_text_file(model_path));
        if (model.num_qubits() != n) {
            throw InputError("Model has " + std::to_string(model.num_qubits()) + " qubits but the data has " +
                             std::to_string(n));
        }
        return model;
    }

    /// Uniform (p0, p1) for the collective path.
    Rates resolve_uniform(std::size_t n) const {
        DetectorModel model = resolve(n);
        if (!model.is_uniform()) {
            throw InputError("Collective inversion needs the same rates on every qubit");
        }
        return model.rates(0);
    }

   private:
    DetectorModel parse_rates() const {
        std::vector<Rates> list;
        std::stringstream in(rates);
        std::string item;
        while (std::getline(in, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos) {
                throw InputError("Bad --rates entry '" + item + "', expected p0:p1");
            }
            try {
                list.push_back(Rates{std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
            } catch (const std::logic_error &) {
                throw InputError("Bad --rates entry '" + item + "'");
            }
        }
        return DetectorModel(std::move(list));
    }
};

void emit(const std::string &output, const std::string &content) {
    if (output.empty() || output == "-") {
        std::cout << content;
    } else {
        write_text_file(output, content);
    }
}

bool looks_like_array(const std::string &text) {
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            return c == '[';
        }
    }
    return false;
}

/// Collective counts array, or a full counts record aggregated by weight.
CollectiveCounts load_collective(const std::string &path) {
    std::string text = read_text_file(path);
    if (looks_like_array(text)) {
        return parse_collective_counts(text);
    }
    return aggregate(parse_counts(text));
}


json estimate_json(const Estimate &e) {
    return json{{"value", e.value}, {"sigma", e.sigma}};
}

std::string dump(const json &doc) {
    return doc.dump(2) + "\n";
}

// Subcommands.

struct CalibrateArgs {
    std::vector<std::string> runs;
    std::string output;
};

void run_calibrate(const CalibrateArgs &args) {
    std::vector<CalibrationRun> runs;
    for (const std::string &path : args.runs) {
        runs.push_back(parse_calibration_run(read_text_file(path)));
    }
    emit(args.output, model_to_json(calibrate(runs)));
}

struct InvertArgs {
    std::string counts;
    ModelFlags model;
    bool collective = false;
    bool project = false;
    std::string output;
};

void run_invert(const InvertArgs &args) {
    DistributionReport report;
    std::optional<Distribution> distribution;
    if (args.collective) {
        CollectiveCounts counts = load_collective(args.counts);
        Rates r = args.model.resolve_uniform(counts.num_qubits());
        CollectiveUnfolding unfolded = unfold_collective(counts, r.p0, r.p1);
        distribution = std::move(unfolded.distribution);
        report.condition_number = unfolded.condition_number;
    } else {
        CountsRecord counts = parse_counts(read_text_file(args.counts));
        distribution = correct(counts, args.model.resolve(counts.num_qubits()));
    }
    report.distribution = &*distribution;
    if (args.project) {
        report.projected = project_to_simplex(distribution->values);
    }
    emit(args.output, distribution_to_json(report));
}

struct ExpectArgs {
    std::string counts;
    std::string observable;
    ModelFlags model;
    std::size_t bootstrap = 0;
    std::uint64_t seed = kDefaultSeed;
    std::string output;
};

void run_expect(const ExpectArgs &args) {
    CountsRecord counts = parse_counts(read_text_file(args.counts));
    PauliString obs = PauliString::parse(args.observable);
    if (obs.num_qubits() != counts.num_qubits()) {
        throw InputError("Observable acts on " + std::to_string(obs.num_qubits()) + " qubits but the data has " +
                         std::to_string(counts.num_qubits()));
    }
    DetectorModel model = args.model.resolve(counts.num_qubits());
    Estimate raw = expect_raw(counts, obs);
    Estimate corrected = expect_corrected(counts, obs, model);

    json doc{{"schema_version", kSchemaVersion},
             {"observable", obs.str()},
             {"setting", counts.setting()},
             {"shots", counts.shots()},
             {"support", obs.support_size()},
             {"raw", estimate_json(raw)},
             {"corrected", estimate_json(corrected)}};
    try {
        doc["correction_factor"] = correction_factor(obs, model);
    } catch (const InputError &) {
        doc["correction_factor"] = nullptr;  // asymmetric rates: no scalar factor
    }
    if (args.bootstrap > 0) {
        doc["raw"]["bootstrap_sigma"] = bootstrap_sigma(
            counts, [&](const WeightedOutcomes &w) { return expect_raw(w, obs).value; }, args.bootstrap, args.seed);
        doc["corrected"]["bootstrap_sigma"] = bootstrap_sigma(
            counts, [&](const WeightedOutcomes &w) { return expect_corrected(w, obs, model).value; }, args.bootstrap,
            args.seed);
    }
    emit(args.output, dump(doc));
}

struct SqueezeArgs {
    std::string z;
    std::string x;
    double p = 0;
    std::string output;
};

void run_squeeze(const SqueezeArgs &args) {
    SqueezingInput input{ExcitationHistogram::from(load_collective(args.z)),
                         ExcitationHistogram::from(load_collective(args.x)), args.p};
    SqueezingResult r = squeezing_corrected(input);
    json doc{{"schema_version", kSchemaVersion},
             {"n", input.z.num_qubits()},
             {"p", args.p},
             {"xi_raw", r.xi_raw},
             {"xi_raw_sigma", r.xi_raw_sigma},
             {"xi_corrected", r.xi_corrected},
             {"xi_corrected_sigma", r.xi_corrected_sigma},
             {"xi_corrected_sigma_scaled", r.xi_corrected_sigma_scaled},
             {"xi_d", r.xi_d},
             {"jx_raw", r.jx_raw},
             {"jx_corrected", r.jx_corrected},
             {"jz2_raw", r.jz2_raw},
             {"jz2_corrected", r.jz2_corrected},
             {"negative_radicand", r.negative_radicand}};
    emit(args.output, dump(doc));
}

struct WitnessArgs {
    std::string graph;
    std::vector<std::string> counts;
    ModelFlags model;
    std::size_t bootstrap = 0;
    std::uint64_t seed = kDefaultSeed;
    std::string output;
};

void run_witness(const WitnessArgs &args) {
    GraphSpec graph = parse_graph(read_text_file(args.graph));
    std::vector<CountsRecord> records;
    for (const std::string &path : args.counts) {
        records.push_back(parse_counts(read_text_file(path)));
    }
    const std::size_t n = graph.num_vertices();
    DetectorModel ideal = DetectorModel::ideal(n);
    WitnessResult raw = witness_value(graph, records, ideal);
    json doc{{"schema_version", kSchemaVersion}, {"n", n}, {"raw", estimate_json(raw.witness)}};
    std::optional<DetectorModel> model;
    if (args.model.any()) {
        model = args.model.resolve(n);
        doc["corrected"] = estimate_json(witness_value(graph, records, *model).witness);
    }
    if (args.bootstrap > 0) {
        doc["raw"]["bootstrap_sigma"] = witness_bootstrap_sigma(graph, records, ideal, args.bootstrap, args.seed);
        if (model) {
            doc["corrected"]["bootstrap_sigma"] =
                witness_bootstrap_sigma(graph, records, *model, args.bootstrap, args.seed);
        }
    }
    emit(args.output, dump(doc));
}

void run_fig1(const Figure1Config &config, const std::string &output) {
    emit(output, figure1_csv(figure1_experiment(config)));
}

void run_fig2(const Figure2Config &config, const std::string &output) {
    emit(output, figure2_csv(figure2_experiment(config)));
}

unsigned default_threads() {
    if (const char *env = std::getenv("DETMIT_THREADS")) {
        try {
            unsigned long v = std::stoul(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::logic_error &) {
        }
    }
    return 1;
}

int run(int argc, char **argv) {
    CLI::App app{"Detection-error mitigation for qubit measurements"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "detmit 0.1.0");

    CalibrateArgs calibrate_args;
    auto *calibrate_cmd = app.add_subcommand("calibrate", "Estimate per-qubit rates from calibration runs");
    calibrate_cmd->add_option("runs", calibrate_args.runs, "Calibration counts files with a 'prepared' field")
        ->required()
        ->check(CLI::ExistingFile);
    calibrate_cmd->add_option("-o,--output", calibrate_args.output, "Model JSON path (default stdout)");

    InvertArgs invert_args;
    auto *invert_cmd = app.add_subcommand("invert", "Reconstruct the true outcome distribution");
    invert_cmd->add_option("counts", invert_args.counts, "Counts file")->required()->check(CLI::ExistingFile);
    invert_args.model.attach(invert_cmd);
    invert_cmd->add_flag("--collective", invert_args.collective, "Unfold the excitation-number histogram");
    invert_cmd->add_flag("--project", invert_args.project, "Also report the projection onto the simplex");
    invert_cmd->add_option("-o,--output", invert_args.output, "Output JSON path (default stdout)");

    InvertArgs collective_args;
    collective_args.collective = true;
    auto *collective_cmd = app.add_subcommand("collective-invert", "Unfold a collective excitation histogram");
    collective_cmd->add_option("counts", collective_args.counts, "Collective counts [c_0, ..., c_n] or counts file")
        ->required()
        ->check(CLI::ExistingFile);
    collective_args.model.attach(collective_cmd);
    collective_cmd->add_flag("--project", collective_args.project, "Also report the projection onto the simplex");
    collective_cmd->add_option("-o,--output", collective_args.output, "Output JSON path (default stdout)");

    ExpectArgs expect_args;
    auto *expect_cmd = app.add_subcommand("expect", "Raw and corrected expectation of a Pauli observable");
    expect_cmd->add_option("counts", expect_args.counts, "Counts file")->required()->check(CLI::ExistingFile);
    expect_cmd->add_option("--observable", expect_args.observable, "Pauli string, qubit 0 leftmost")->required();
    expect_args.model.attach(expect_cmd);
    expect_cmd->add_option("--bootstrap", expect_args.bootstrap, "Bootstrap resamples (0 disables)");
    expect_cmd->add_option("--seed", expect_args.seed, "Bootstrap seed");
    expect_cmd->add_option("-o,--output", expect_args.output, "Output JSON path (default stdout)");

    SqueezeArgs squeeze_args;
    auto *squeeze_cmd = app.add_subcommand("squeeze", "Raw and corrected spin-squeezing parameter");
    squeeze_cmd->add_option("--z", squeeze_args.z, "Histogram measured along z")
        ->required()
        ->check(CLI::ExistingFile);
    squeeze_cmd->add_option("--x", squeeze_args.x, "Histogram measured along x")
        ->required()
        ->check(CLI::ExistingFile);
    squeeze_cmd->add_option("--p", squeeze_args.p, "Symmetric flip rate")->required();
    squeeze_cmd->add_option("-o,--output", squeeze_args.output, "Output JSON path (default stdout)");

    WitnessArgs witness_args;
    auto *witness_cmd = app.add_subcommand("witness", "Graph-state entanglement witness from color-class data");
    witness_cmd->add_option("--graph", witness_args.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
    witness_cmd->add_option("counts", witness_args.counts, "One counts file per color class, in class order")
        ->required()
        ->check(CLI::ExistingFile);
    witness_args.model.attach(witness_cmd);
    witness_cmd->add_option("--bootstrap", witness_args.bootstrap, "Bootstrap resamples (0 disables)");
    witness_cmd->add_option("--seed", witness_args.seed, "Bootstrap seed");
    witness_cmd->add_option("-o,--output", witness_args.output, "Output JSON path (default stdout)");

    const unsigned threads = default_threads();

    Figure1Config fig1;
    fig1.threads = threads;
    std::string fig1_output;
    auto *fig1_cmd = app.add_subcommand("simulate-fig1", "Stabilizers before and after correction (CSV)");
    fig1_cmd->add_option("--n", fig1.num_qubits, "Number of qubits")->capture_default_str();
    fig1_cmd->add_option("--p", fig1.p, "Symmetric detector flip rate")->capture_default_str();
    fig1_cmd->add_option("--p-n", fig1.p_n, "Depolarizing preparation noise")->capture_default_str();
    fig1_cmd->add_option("--shots", fig1.shots, "Shots per setting")->capture_default_str();
    fig1_cmd->add_option("--seed", fig1.seed, "RNG seed")->capture_default_str();
    fig1_cmd->add_option("--threads", fig1.threads, "Sampling threads (env DETMIT_THREADS)")->capture_default_str();
    fig1_cmd->add_option("--bootstrap", fig1.bootstrap, "Bootstrap resamples (0 disables)")->capture_default_str();
    fig1_cmd->add_option("-o,--output", fig1_output, "CSV path (default stdout)");

    Figure2Config fig2;
    fig2.threads = threads;
    std::string fig2_output;
    auto *fig2_cmd = app.add_subcommand("simulate-fig2", "Witness versus preparation noise (CSV)");
    fig2_cmd->add_option("--n", fig2.num_qubits, "Number of qubits")->capture_default_str();
    fig2_cmd->add_option("--p", fig2.p, "Symmetric detector flip rate")->capture_default_str();
    fig2_cmd->add_option("--p-n-grid", fig2.p_n_grid, "Comma-separated p_n values (default 0:0.005:0.10)")
        ->delimiter(',');
    fig2_cmd->add_option("--shots", fig2.shots, "Shots per setting")->capture_default_str();
    fig2_cmd->add_option("--seed", fig2.seed, "RNG seed")->capture_default_str();
    fig2_cmd->add_option("--threads", fig2.threads, "Sampling threads (env DETMIT_THREADS)")->capture_default_str();
    fig2_cmd->add_option("--bootstrap", fig2.bootstrap, "Bootstrap resamples (0 disables)")->capture_default_str();
    fig2_cmd->add_option("-o,--output", fig2_output, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*calibrate_cmd) {
            run_calibrate(calibrate_args);
        } else if (*invert_cmd) {
            run_invert(invert_args);
        } else if (*collective_cmd) {
            run_invert(collective_args);
        } else if (*expect_cmd) {
            run_expect(expect_args);
        } else if (*squeeze_cmd) {
            run_squeeze(squeeze_args);
        } else if (*witness_cmd) {
            run_witness(witness_args);
        } else if (*fig1_cmd) {
            run_fig1(fig1, fig1_output);
        } else if (*fig2_cmd) {
            run_fig2(fig2, fig2_output);
        }
    } catch (const SingularModelError &e) {
        std::cerr << "singular model: " << e.what() << "\n";
        return kExitSingular;
    } catch (const ResourceLimitError &e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const NoDataError &e) {
        std::cerr << "no data: " << e.what() << "\n";
        return kExitInput;
    } catch (const DegenerateMeanSpinError &e) {
        std::cerr << "degenerate mean spin: " << e.what() << "\n";
        return kExitInput;
    } catch (const InputError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    return run(argc, argv);
}
