// Copyright 2026 The eprsim Authors.
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

// Command-line experiment runner. Exit codes: 0 success, 1 internal error,
// 2 configuration error, 3 POVM parse/validation error, 4 protocol failure
// (no acceptance within max_rounds).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "eprsim/experiment.hpp"
#include "eprsim/protocol.hpp"
#include "eprsim/version.hpp"

namespace {

constexpr int kExitInternalError = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitPovmError = 3;
constexpr int kExitProtocolError = 4;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + out_path);
    }
    out << text;
}

void add_format_option(CLI::App* cmd, eprsim::ExperimentConfig& cfg) {
    static const std::map<std::string, eprsim::ReportFormat> formats{
        {"json", eprsim::ReportFormat::json}, {"csv", eprsim::ReportFormat::csv}};
    cmd->add_option("--format", cfg.format, "Report format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("json");
}

void add_run_options(CLI::App* cmd, eprsim::ExperimentConfig& cfg) {
    cmd->add_option("--trials", cfg.trials, "Number of independent protocol runs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "Master seed; all substreams derive from it")
        ->capture_default_str();
    cmd->add_option("--max-rounds", cfg.max_rounds, "Abort a run after this many rounds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--parallelism", cfg.parallelism,
                    "Worker threads (0 = all cores); never affects report bytes")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
}

void add_povm_options(CLI::App* cmd, eprsim::ExperimentConfig& cfg) {
    cmd->add_option("--povm-a", cfg.povm_a,
                    "Alice's POVM: file path, 'sic', 'projective:x,y,z', or 'random:n'")
        ->capture_default_str();
    cmd->add_option("--povm-b", cfg.povm_b, "Bob's POVM; same forms as --povm-a")
        ->capture_default_str();
    cmd->add_option("--povm-eps", cfg.povm_eps, "Completeness tolerance for POVM files")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classical simulation of bipartite POVM measurements on an EPR pair"};
    app.set_version_flag("--version", std::string("eprsim ") + eprsim::kVersion);
    app.require_subcommand(1);

    eprsim::ExperimentConfig cfg;
    std::string out_path;
    std::string validate_path;
    double validate_eps = eprsim::Povm::kUserEps;

    CLI::App* simulate = app.add_subcommand(
        "simulate", "Run the protocol and compare against the exact distribution");
    add_povm_options(simulate, cfg);
    add_run_options(simulate, cfg);
    add_format_option(simulate, cfg);
    simulate->add_option("--entropy-samples", cfg.entropy_samples,
                         "Samples for the d' conditional entropy estimate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->add_option("--out", out_path, "Write the report here instead of stdout");

    CLI::App* oracle = app.add_subcommand("oracle", "Print the exact joint and marginals");
    add_povm_options(oracle, cfg);
    oracle->add_option("--seed", cfg.seed, "Seed used when a POVM source is 'random:n'")
        ->capture_default_str();
    add_format_option(oracle, cfg);
    oracle->add_option("--out", out_path, "Write the report here instead of stdout");

    CLI::App* chsh = app.add_subcommand(
        "chsh", "Estimate the CHSH quantity at the optimal settings via the protocol");
    add_run_options(chsh, cfg);
    add_format_option(chsh, cfg);
    chsh->add_option("--out", out_path, "Write the report here instead of stdout");

    CLI::App* cost = app.add_subcommand(
        "cost", "Report communication cost: plain bits, d' entropy, block-coded bits");
    add_povm_options(cost, cfg);
    add_run_options(cost, cfg);
    add_format_option(cost, cfg);
    cost->add_option("--entropy-samples", cfg.entropy_samples,
                     "Samples for the d' conditional entropy estimate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cost->add_option("--out", out_path, "Write the report here instead of stdout");

    CLI::App* validate = app.add_subcommand("validate", "Check a POVM file");
    validate->add_option("file", validate_path, "POVM JSON file")->required();
    validate->add_option("--povm-eps", validate_eps, "Completeness tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfigError;
    }

    try {
        if (simulate->parsed()) {
            write_output(eprsim::simulate_report(cfg), out_path);
        } else if (oracle->parsed()) {
            write_output(eprsim::oracle_report(cfg), out_path);
        } else if (chsh->parsed()) {
            write_output(eprsim::chsh_report(cfg), out_path);
        } else if (cost->parsed()) {
            write_output(eprsim::cost_report(cfg), out_path);
        } else if (validate->parsed()) {
            const eprsim::ValidationOutcome v = eprsim::validate_povm_file(validate_path,
                                                                           validate_eps);
            std::cout << v.report;
            return v.valid ? 0 : kExitPovmError;
        }
        return 0;
    } catch (const eprsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const eprsim::PovmValidationError& e) {
        std::cerr << "POVM validation error: " << e.what() << "\n";
        return kExitPovmError;
    } catch (const eprsim::PovmParseError& e) {
        std::cerr << "POVM error: " << e.what() << "\n";
        return kExitPovmError;
    } catch (const eprsim::MaxRoundsExceeded& e) {
        std::cerr << "protocol failure: " << e.what() << "\n";
        return kExitProtocolError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternalError;
    }
}
