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

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eprsim/experiment.hpp"
#include "eprsim/protocol.hpp"
#include "eprsim/version.hpp"

namespace eprsim {

namespace {

using nlohmann::json;

// CSV round histogram columns: hist_1..hist_20 plus an overflow bucket.
constexpr std::size_t kCsvHistBuckets = 20;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

json povm_to_json(const Povm& p) {
    json arr = json::array();
    for (const Vec3& b : p.elements()) arr.push_back({b.x, b.y, b.z});
    return arr;
}

json matrix_to_json(const JointDistribution& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json counts_to_json(const EmpiricalJoint& e) {
    json rows = json::array();
    for (std::size_t i = 0; i < e.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < e.cols(); ++j) row.push_back(e.count(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Config echo: semantic fields only. Parallelism is an execution detail and
// deliberately left out so report bytes do not depend on it.
json config_to_json(const ExperimentConfig& cfg) {
    return json{{"seed", cfg.seed},
                {"trials", cfg.trials},
                {"povm_a", cfg.povm_a},
                {"povm_b", cfg.povm_b},
                {"povm_eps", cfg.povm_eps},
                {"max_rounds", cfg.max_rounds},
                {"entropy_samples", cfg.entropy_samples},
                {"format", cfg.format == ReportFormat::json ? "json" : "csv"}};
}

void append_histogram_csv(std::string& header, std::string& row,
                          const std::vector<std::uint64_t>& hist) {
    std::uint64_t overflow = 0;
    for (std::size_t k = kCsvHistBuckets; k < hist.size(); ++k) overflow += hist[k];
    for (std::size_t k = 0; k < kCsvHistBuckets; ++k) {
        header += ",hist_" + std::to_string(k + 1);
        row += ',' + std::to_string(k < hist.size() ? hist[k] : 0);
    }
    header += ",hist_gt_20";
    row += ',' + std::to_string(overflow);
}

std::string config_csv_header() {
    return "seed,trials,povm_a,povm_b,povm_eps,max_rounds,entropy_samples";
}

std::string config_csv_row(const ExperimentConfig& cfg) {
    return std::to_string(cfg.seed) + ',' + std::to_string(cfg.trials) + ',' +
           csv_quote(cfg.povm_a) + ',' + csv_quote(cfg.povm_b) + ',' + fmt(cfg.povm_eps) + ',' +
           std::to_string(cfg.max_rounds) + ',' + std::to_string(cfg.entropy_samples);
}

std::uint64_t acc_runs(const RunReport& r) { return r.empirical.total(); }

json report_to_json(const char* command, const ExperimentConfig& cfg,
                    const SimulationResult& sim) {
    const RunReport& r = sim.report;
    return json{{"tool", "eprsim"},
                {"version", kVersion},
                {"command", command},
                {"config", config_to_json(cfg)},
                {"povm_a", povm_to_json(sim.povm_a)},
                {"povm_b", povm_to_json(sim.povm_b)},
                {"oracle_joint", matrix_to_json(sim.oracle_joint)},
                {"empirical_counts", counts_to_json(r.empirical)},
                {"empirical_p", matrix_to_json(r.empirical.normalized())},
                {"runs", acc_runs(r)},
                {"mean_rounds", r.mean_rounds},
                {"mean_bits", r.mean_bits},
                {"acceptance_rate", r.acceptance_rate},
                {"bits_a_to_b", r.total_bits_a_to_b},
                {"bits_b_to_a", r.total_bits_b_to_a},
                {"tvd", r.tvd},
                {"chi2",
                 {{"statistic", r.chi2_statistic},
                  {"pvalue", r.chi2_pvalue},
                  {"dof", r.chi2_dof},
                  {"impossible_cell", r.chi2_impossible_cell}}},
                {"h_dprime", r.h_dprime},
                {"blockcoded_bits", r.blockcoded_bits},
                {"round_histogram", r.round_histogram}};
}

}  // namespace

std::string simulate_report(const ExperimentConfig& cfg) {
    const SimulationResult sim = run_simulation(cfg);
    const RunReport& r = sim.report;
    if (cfg.format == ReportFormat::json) {
        return report_to_json("simulate", cfg, sim).dump(2) + "\n";
    }
    std::string header = config_csv_header() +
                         ",runs,mean_rounds,mean_bits,acceptance_rate,tvd,chi2_statistic,"
                         "chi2_pvalue,chi2_dof,h_dprime,blockcoded_bits";
    std::string row = config_csv_row(cfg) + ',' + std::to_string(acc_runs(r)) + ',' +
                      fmt(r.mean_rounds) + ',' + fmt(r.mean_bits) + ',' +
                      fmt(r.acceptance_rate) + ',' + fmt(r.tvd) + ',' + fmt(r.chi2_statistic) +
                      ',' + fmt(r.chi2_pvalue) + ',' + std::to_string(r.chi2_dof) + ',' +
                      fmt(r.h_dprime) + ',' + fmt(r.blockcoded_bits);
    const JointDistribution p = r.empirical.normalized();
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) {
            header += ",p_" + std::to_string(i) + '_' + std::to_string(j);
            row += ',' + fmt(p.at(i, j));
        }
    }
    return header + '\n' + row + '\n';
}

std::string oracle_report(const ExperimentConfig& cfg) {
    if (cfg.povm_eps <= 0.0) {
        throw ConfigError("povm_eps must be > 0");
    }
    const Povm a = resolve_povm_source(cfg.povm_a, cfg.povm_eps, cfg.seed, kDomainPovmA);
    const Povm b = resolve_povm_source(cfg.povm_b, cfg.povm_eps, cfg.seed, kDomainPovmB);
    const JointDistribution jd = joint(a, b);
    const std::vector<double> ma = marginal(a);
    const std::vector<double> mb = marginal(b);

    if (cfg.format == ReportFormat::json) {
        json out{{"tool", "eprsim"},
                 {"version", kVersion},
                 {"command", "oracle"},
                 {"config",
                  {{"seed", cfg.seed},
                   {"povm_a", cfg.povm_a},
                   {"povm_b", cfg.povm_b},
                   {"povm_eps", cfg.povm_eps}}},
                 {"povm_a", povm_to_json(a)},
                 {"povm_b", povm_to_json(b)},
                 {"joint", matrix_to_json(jd)},
                 {"marginal_a", ma},
                 {"marginal_b", mb}};
        return out.dump(2) + "\n";
    }
    std::string header = "povm_a,povm_b";
    std::string row = csv_quote(cfg.povm_a) + ',' + csv_quote(cfg.povm_b);
    for (std::size_t i = 0; i < jd.rows(); ++i) {
        for (std::size_t j = 0; j < jd.cols(); ++j) {
            header += ",p_" + std::to_string(i) + '_' + std::to_string(j);
            row += ',' + fmt(jd.at(i, j));
        }
    }
    for (std::size_t i = 0; i < ma.size(); ++i) {
        header += ",ma_" + std::to_string(i);
        row += ',' + fmt(ma[i]);
    }
    for (std::size_t j = 0; j < mb.size(); ++j) {
        header += ",mb_" + std::to_string(j);
        row += ',' + fmt(mb[j]);
    }
    return header + '\n' + row + '\n';
}

std::string chsh_report(const ExperimentConfig& cfg) {
    constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    const UnitVec3 a_axis{Vec3{0, 0, 1}};
    const UnitVec3 a2_axis{Vec3{1, 0, 0}};
    const UnitVec3 b_axis{Vec3{inv_sqrt2, 0, inv_sqrt2}};
    const UnitVec3 b2_axis{Vec3{-inv_sqrt2, 0, inv_sqrt2}};

    const std::array<std::pair<UnitVec3, UnitVec3>, 4> settings{
        {{a_axis, b_axis}, {a_axis, b2_axis}, {a2_axis, b_axis}, {a2_axis, b2_axis}}};
    const std::array<const char*, 4> labels{"ab", "ab2", "a2b", "a2b2"};

    std::array<double, 4> corr{};
    std::array<double, 4> corr_se{};
    json pairs = json::array();
    std::string csv_header;
    std::string csv_row;
    for (std::size_t s = 0; s < settings.size(); ++s) {
        const Povm pa = Povm::projective(settings[s].first);
        const Povm pb = Povm::projective(settings[s].second);
        const TranscriptAccumulator acc = run_batch(pa, pb, cfg.trials, cfg.seed,
                                                    kDomainChshBase + s, cfg.max_rounds,
                                                    cfg.parallelism);
        const double n = static_cast<double>(acc.runs);
        const std::uint64_t same = acc.counts.count(0, 0) + acc.counts.count(1, 1);
        const std::uint64_t diff = acc.counts.count(0, 1) + acc.counts.count(1, 0);
        corr[s] = (static_cast<double>(same) - static_cast<double>(diff)) / n;
        corr_se[s] = std::sqrt(std::max(0.0, 1.0 - corr[s] * corr[s]) / n);
        pairs.push_back(json{{"pair", labels[s]},
                             {"value", corr[s]},
                             {"stderr", corr_se[s]},
                             {"runs", acc.runs}});
        csv_header += std::string(s ? "," : "") + "corr_" + labels[s];
        csv_row += std::string(s ? "," : "") + fmt(corr[s]);
    }
    const double s_value = corr[0] + corr[1] + corr[2] - corr[3];
    const double s_se = std::sqrt(corr_se[0] * corr_se[0] + corr_se[1] * corr_se[1] +
                                  corr_se[2] * corr_se[2] + corr_se[3] * corr_se[3]);
    const double oracle_s = chsh(a_axis, a2_axis, b_axis, b2_axis);

    if (cfg.format == ReportFormat::json) {
        json out{{"tool", "eprsim"},
                 {"version", kVersion},
                 {"command", "chsh"},
                 {"config",
                  {{"seed", cfg.seed},
                   {"trials", cfg.trials},
                   {"max_rounds", cfg.max_rounds}}},
                 {"settings",
                  {{"a", {0, 0, 1}},
                   {"a2", {1, 0, 0}},
                   {"b", {inv_sqrt2, 0, inv_sqrt2}},
                   {"b2", {-inv_sqrt2, 0, inv_sqrt2}}}},
                 {"correlations", pairs},
                 {"S", s_value},
                 {"S_stderr", s_se},
                 {"oracle_S", oracle_s}};
        return out.dump(2) + "\n";
    }
    return csv_header + ",S,S_stderr,oracle_S\n" + csv_row + ',' + fmt(s_value) + ',' +
           fmt(s_se) + ',' + fmt(oracle_s) + '\n';
}

std::string cost_report(const ExperimentConfig& cfg) {
    const SimulationResult sim = run_simulation(cfg);
    const RunReport& r = sim.report;
    if (cfg.format == ReportFormat::json) {
        json out{{"tool", "eprsim"},
                 {"version", kVersion},
                 {"command", "cost"},
                 {"config", config_to_json(cfg)},
                 {"runs", acc_runs(r)},
                 {"mean_rounds", r.mean_rounds},
                 {"plain_bits", r.mean_bits},
                 {"acceptance_rate", r.acceptance_rate},
                 {"h_dprime", r.h_dprime},
                 {"blockcoded_bits", r.blockcoded_bits},
                 {"round_histogram", r.round_histogram}};
        return out.dump(2) + "\n";
    }
    std::string header =
        config_csv_header() + ",runs,mean_rounds,plain_bits,h_dprime,blockcoded_bits";
    std::string row = config_csv_row(cfg) + ',' + std::to_string(acc_runs(r)) + ',' +
                      fmt(r.mean_rounds) + ',' + fmt(r.mean_bits) + ',' + fmt(r.h_dprime) + ',' +
                      fmt(r.blockcoded_bits);
    append_histogram_csv(header, row, r.round_histogram);
    return header + '\n' + row + '\n';
}

ValidationOutcome validate_povm_file(const std::string& path, double eps) {
    json out{{"tool", "eprsim"},
             {"version", kVersion},
             {"command", "validate"},
             {"path", path},
             {"povm_eps", eps}};
    try {
        const Povm p = read_povm_file(path, eps);
        out["valid"] = true;
        out["elements"] = p.size();
        out["weights"] = std::vector<double>(p.weights().begin(), p.weights().end());
        return {true, out.dump(2) + "\n"};
    } catch (const PovmValidationError& e) {
        out["valid"] = false;
        out["violation"] = e.what();
        return {false, out.dump(2) + "\n"};
    } catch (const PovmParseError& e) {
        out["valid"] = false;
        out["violation"] = e.what();
        return {false, out.dump(2) + "\n"};
    }
}

}  // namespace eprsim
