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

#pragma once

#include <cstdint>
#include <string>

#include "eprsim/oracle.hpp"
#include "eprsim/povm.hpp"
#include "eprsim/stats.hpp"

// Experiment runner behind the CLI: resolves POVM sources, fans protocol
// runs out over a worker pool, and renders machine-readable reports.
//
// Report bytes are a pure function of the semantic configuration (seed,
// trials, POVM sources, eps, max_rounds, entropy_samples, format): run k of a
// batch always uses substream (seed, domain, k), and every accumulated
// quantity is an integer until finalization, so the parallelism level never
// shows up in the output.

namespace eprsim {

class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

enum class ReportFormat { json, csv };

struct ExperimentConfig {
    std::uint64_t seed = 1;
    std::uint64_t trials = 1000000;
    // POVM source: "sic", "projective:<x>,<y>,<z>", "random:<n>", or a file
    // path to a JSON array of Bloch vectors.
    std::string povm_a = "sic";
    std::string povm_b = "sic";
    double povm_eps = Povm::kUserEps;
    int max_rounds = kDefaultMaxRounds;
    std::uint64_t entropy_samples = 1000000;
    ReportFormat format = ReportFormat::json;
    int parallelism = 0;  // 0 = all hardware threads; execution detail only
};

// Resolves a POVM source string. Generator specs draw from
// substream (seed, domain); file paths are validated with `eps`.
Povm resolve_povm_source(const std::string& source, double eps, std::uint64_t seed,
                         std::uint64_t domain);

// `trials` independent protocol runs, run k on substream (seed, domain, k),
// partitioned over `parallelism` workers. Throws MaxRoundsExceeded carrying
// the smallest failing run index.
TranscriptAccumulator run_batch(const Povm& a, const Povm& b, std::uint64_t trials,
                                std::uint64_t seed, std::uint64_t domain, int max_rounds,
                                int parallelism);

struct SimulationResult {
    Povm povm_a;
    Povm povm_b;
    JointDistribution oracle_joint;
    RunReport report;
};

SimulationResult run_simulation(const ExperimentConfig& cfg);

// Serialized reports for the CLI subcommands.
std::string simulate_report(const ExperimentConfig& cfg);
std::string oracle_report(const ExperimentConfig& cfg);
std::string chsh_report(const ExperimentConfig& cfg);
std::string cost_report(const ExperimentConfig& cfg);

struct ValidationOutcome {
    bool valid;
    std::string report;
};
ValidationOutcome validate_povm_file(const std::string& path, double eps);

}  // namespace eprsim
