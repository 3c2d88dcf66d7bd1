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

#include "eprsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <boost/math/special_functions/gamma.hpp>

namespace eprsim {

void EmpiricalJoint::merge(const EmpiricalJoint& other) {
    if (other.rows_ != rows_ || other.cols_ != cols_) {
        throw ShapeMismatch("EmpiricalJoint::merge: shapes differ");
    }
    for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] += other.counts_[k];
}

std::uint64_t EmpiricalJoint::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

JointDistribution EmpiricalJoint::normalized() const {
    const std::uint64_t n = total();
    JointDistribution p(rows_, cols_);
    if (n == 0) return p;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            p.at(i, j) = static_cast<double>(count(i, j)) / static_cast<double>(n);
        }
    }
    return p;
}

double tvd(const JointDistribution& p, const JointDistribution& q) {
    if (p.rows() != q.rows() || p.cols() != q.cols()) {
        throw ShapeMismatch("tvd: distributions have different shapes");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) {
            sum += std::abs(p.at(i, j) - q.at(i, j));
        }
    }
    return 0.5 * sum;
}

double chi_square_sf(double statistic, double dof) {
    if (dof <= 0.0) {
        return statistic == 0.0 ? 1.0 : 0.0;
    }
    return boost::math::gamma_q(dof / 2.0, statistic / 2.0);
}

ChiSquareResult chi_square_pvalue(const EmpiricalJoint& observed,
                                  const JointDistribution& expected) {
    if (observed.rows() != expected.rows() || observed.cols() != expected.cols()) {
        throw ShapeMismatch("chi_square_pvalue: shapes differ");
    }
    const double n = static_cast<double>(observed.total());
    ChiSquareResult r;
    std::uint64_t positive_cells = 0;
    for (std::size_t i = 0; i < observed.rows(); ++i) {
        for (std::size_t j = 0; j < observed.cols(); ++j) {
            const double pij = expected.at(i, j);
            const std::uint64_t obs = observed.count(i, j);
            if (pij <= 0.0) {
                if (obs > 0) {
                    r.impossible_cell_hit = true;
                }
                continue;
            }
            ++positive_cells;
            const double exp_count = n * pij;
            const double diff = static_cast<double>(obs) - exp_count;
            r.statistic += diff * diff / exp_count;
        }
    }
    r.dof = positive_cells > 0 ? positive_cells - 1 : 0;
    r.pvalue = r.impossible_cell_hit
                   ? 0.0
                   : chi_square_sf(r.statistic, static_cast<double>(r.dof));
    return r;
}

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double dprime_conditional_entropy(std::uint64_t n_samples, Rng& rng) {
    constexpr double pi = std::numbers::pi;
    double sum = 0.0;
    for (std::uint64_t k = 0; k < n_samples; ++k) {
        const UnitVec3 v1 = sample_unit_vector(rng);
        const UnitVec3 v2 = sample_unit_vector(rng);
        const double angle = std::acos(std::clamp(dot(v1, v2), -1.0, 1.0));
        sum += binary_entropy(angle / pi);
    }
    return sum / static_cast<double>(n_samples);
}

void TranscriptAccumulator::add(const Transcript& t) {
    counts.add(t.outcome_a, t.outcome_b);
    runs += 1;
    total_rounds += t.rounds;
    total_bits_a_to_b += t.bits_a_to_b;
    total_bits_b_to_a += t.bits_b_to_a;
    dprime_ones += t.dprime_ones;
    if (round_histogram.size() < t.rounds) round_histogram.resize(t.rounds, 0);
    round_histogram[t.rounds - 1] += 1;
}

void TranscriptAccumulator::merge(const TranscriptAccumulator& other) {
    counts.merge(other.counts);
    runs += other.runs;
    total_rounds += other.total_rounds;
    total_bits_a_to_b += other.total_bits_a_to_b;
    total_bits_b_to_a += other.total_bits_b_to_a;
    dprime_ones += other.dprime_ones;
    if (round_histogram.size() < other.round_histogram.size()) {
        round_histogram.resize(other.round_histogram.size(), 0);
    }
    for (std::size_t k = 0; k < other.round_histogram.size(); ++k) {
        round_histogram[k] += other.round_histogram[k];
    }
}

RunReport aggregate(const TranscriptAccumulator& acc, const JointDistribution& oracle_joint,
                    double dprime_entropy) {
    if (acc.runs == 0) {
        throw EmptyInput("aggregate: no transcripts");
    }
    RunReport r{acc.counts};
    const double runs = static_cast<double>(acc.runs);
    r.mean_rounds = static_cast<double>(acc.total_rounds) / runs;
    // Plain encoding sends exactly 3 bits per round, so the mean follows from
    // mean_rounds; the counted totals are reported alongside.
    r.mean_bits = 3.0 * r.mean_rounds;
    r.acceptance_rate = runs / static_cast<double>(acc.total_rounds);
    r.total_bits_a_to_b = acc.total_bits_a_to_b;
    r.total_bits_b_to_a = acc.total_bits_b_to_a;
    r.round_histogram = acc.round_histogram;
    r.tvd = tvd(acc.counts.normalized(), oracle_joint);
    const ChiSquareResult chi = chi_square_pvalue(acc.counts, oracle_joint);
    r.chi2_statistic = chi.statistic;
    r.chi2_pvalue = chi.pvalue;
    r.chi2_dof = chi.dof;
    r.chi2_impossible_cell = chi.impossible_cell_hit;
    r.h_dprime = dprime_entropy;
    r.blockcoded_bits = blockcoded_cost(r.mean_rounds, dprime_entropy);
    return r;
}

RunReport aggregate(std::span<const Transcript> transcripts,
                    const JointDistribution& oracle_joint, double dprime_entropy) {
    if (transcripts.empty()) {
        throw EmptyInput("aggregate: no transcripts");
    }
    TranscriptAccumulator acc(oracle_joint.rows(), oracle_joint.cols());
    for (const Transcript& t : transcripts) acc.add(t);
    return aggregate(acc, oracle_joint, dprime_entropy);
}

}  // namespace eprsim
