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

#include "eprsim/experiment.hpp"

#include <atomic>
#include <charconv>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "eprsim/protocol.hpp"

namespace eprsim {

namespace {

double parse_component(std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw ConfigError("bad number in POVM source: '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

Povm resolve_povm_source(const std::string& source, double eps, std::uint64_t seed,
                         std::uint64_t domain) {
    if (source == "sic") {
        return Povm::sic_tetrahedron();
    }
    if (source.starts_with("projective:")) {
        const std::string_view rest = std::string_view(source).substr(11);
        Vec3 n;
        double* comp[3] = {&n.x, &n.y, &n.z};
        std::size_t pos = 0;
        for (int k = 0; k < 3; ++k) {
            const std::size_t comma = (k < 2) ? rest.find(',', pos) : rest.size();
            if (comma == std::string_view::npos) {
                throw ConfigError("projective source needs 3 comma-separated components: " +
                                  source);
            }
            *comp[k] = parse_component(rest.substr(pos, comma - pos));
            pos = comma + 1;
        }
        if (norm(n) == 0.0) {
            throw ConfigError("projective source direction must be nonzero: " + source);
        }
        return Povm::projective(UnitVec3::normalized(n));
    }
    if (source.starts_with("random:")) {
        int n = 0;
        const std::string_view rest = std::string_view(source).substr(7);
        const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
        if (ec != std::errc{} || ptr != rest.data() + rest.size() || n < 2) {
            throw ConfigError("random source needs an element count >= 2: " + source);
        }
        Rng rng = make_rng(seed, domain);
        return Povm::random(n, rng);
    }
    return read_povm_file(source, eps);
}

TranscriptAccumulator run_batch(const Povm& a, const Povm& b, std::uint64_t trials,
                                std::uint64_t seed, std::uint64_t domain, int max_rounds,
                                int parallelism) {
    if (trials == 0) {
        throw ConfigError("trials must be >= 1");
    }
    if (max_rounds < 1) {
        throw ConfigError("max_rounds must be >= 1");
    }
    std::uint64_t workers = parallelism > 0
                                ? static_cast<std::uint64_t>(parallelism)
                                : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, trials);

    std::vector<TranscriptAccumulator> shards(workers, TranscriptAccumulator(a.size(), b.size()));
    std::atomic<std::uint64_t> first_failed_run{std::numeric_limits<std::uint64_t>::max()};
    std::exception_ptr worker_error;
    std::mutex error_mutex;

    auto work = [&](std::uint64_t w) {
        const std::uint64_t lo = trials * w / workers;
        const std::uint64_t hi = trials * (w + 1) / workers;
        TranscriptAccumulator& acc = shards[w];
        for (std::uint64_t k = lo; k < hi; ++k) {
            if (first_failed_run.load(std::memory_order_relaxed) < lo) break;
            Rng rng = make_rng(seed, domain, k);
            try {
                acc.add(run_protocol(a, b, rng, max_rounds));
            } catch (const MaxRoundsExceeded&) {
                std::uint64_t seen = first_failed_run.load();
                while (k < seen && !first_failed_run.compare_exchange_weak(seen, k)) {
                }
                break;
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!worker_error) worker_error = std::current_exception();
                break;
            }
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (std::thread& t : pool) t.join();
    }

    if (worker_error) std::rethrow_exception(worker_error);
    const std::uint64_t failed = first_failed_run.load();
    if (failed != std::numeric_limits<std::uint64_t>::max()) {
        throw MaxRoundsExceeded(static_cast<std::uint64_t>(max_rounds), failed);
    }

    TranscriptAccumulator result = std::move(shards[0]);
    for (std::uint64_t w = 1; w < workers; ++w) result.merge(shards[w]);
    return result;
}

SimulationResult run_simulation(const ExperimentConfig& cfg) {
    if (cfg.povm_eps <= 0.0) {
        throw ConfigError("povm_eps must be > 0");
    }
    if (cfg.entropy_samples == 0) {
        throw ConfigError("entropy_samples must be >= 1");
    }
    Povm a = resolve_povm_source(cfg.povm_a, cfg.povm_eps, cfg.seed, kDomainPovmA);
    Povm b = resolve_povm_source(cfg.povm_b, cfg.povm_eps, cfg.seed, kDomainPovmB);
    JointDistribution oracle_joint = joint(a, b);

    TranscriptAccumulator acc = run_batch(a, b, cfg.trials, cfg.seed, kDomainProtocolRun,
                                          cfg.max_rounds, cfg.parallelism);
    Rng entropy_rng = make_rng(cfg.seed, kDomainEntropy);
    const double h = dprime_conditional_entropy(cfg.entropy_samples, entropy_rng);

    RunReport report = aggregate(acc, oracle_joint, h);
    return SimulationResult{std::move(a), std::move(b), std::move(oracle_joint),
                            std::move(report)};
}

}  // namespace eprsim
