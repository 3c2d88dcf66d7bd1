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
#include <span>
#include <stdexcept>
#include <vector>

#include "eprsim/oracle.hpp"
#include "eprsim/protocol.hpp"
#include "eprsim/rng.hpp"

// Turns Monte Carlo transcripts into verdicts: empirical distributions,
// total variation distance, Pearson chi-square goodness of fit, and the
// communication-cost statistics.

namespace eprsim {

class ShapeMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class EmptyInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Outcome-pair counts over a batch of runs.
class EmpiricalJoint {
  public:
    EmpiricalJoint(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), counts_(rows * cols, 0) {}

    void add(int i, int j) { ++counts_[static_cast<std::size_t>(i) * cols_ + j]; }
    void merge(const EmpiricalJoint& other);

    std::uint64_t count(std::size_t i, std::size_t j) const { return counts_[i * cols_ + j]; }
    std::uint64_t total() const;
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    JointDistribution normalized() const;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> counts_;
};

// (1/2) sum |p - q| over cells.
double tvd(const JointDistribution& p, const JointDistribution& q);

struct ChiSquareResult {
    double statistic = 0.0;
    double pvalue = 1.0;
    std::uint64_t dof = 0;
    // An outcome landed in a cell with expected probability 0; pvalue is 0.
    bool impossible_cell_hit = false;
};

// Pearson goodness of fit of observed counts against `expected`, with
// dof = (#cells with expected > 0) - 1.
ChiSquareResult chi_square_pvalue(const EmpiricalJoint& observed,
                                  const JointDistribution& expected);

// Survival function of the chi-square distribution with `dof` degrees of
// freedom, via the regularized upper incomplete gamma function.
double chi_square_sf(double statistic, double dof);

// Binary entropy in bits, with the 0 log 0 = 0 convention.
double binary_entropy(double p);

// Monte Carlo estimate of the conditional entropy of d' given the shared
// vectors: E[H2(theta/pi)] with theta the angle between two independent
// uniform unit vectors. This is what block coding of d' can reach.
double dprime_conditional_entropy(std::uint64_t n_samples, Rng& rng);

// Mergeable accumulator over transcripts. Integer sums only, so merging
// shards in any order equals sequential accumulation exactly.
struct TranscriptAccumulator {
    TranscriptAccumulator(std::size_t rows, std::size_t cols) : counts(rows, cols) {}

    EmpiricalJoint counts;
    std::uint64_t runs = 0;
    std::uint64_t total_rounds = 0;
    std::uint64_t total_bits_a_to_b = 0;
    std::uint64_t total_bits_b_to_a = 0;
    std::uint64_t dprime_ones = 0;
    std::vector<std::uint64_t> round_histogram;  // index k-1 counts runs with k rounds

    void add(const Transcript& t);
    void merge(const TranscriptAccumulator& other);
};

struct RunReport {
    EmpiricalJoint empirical;
    double tvd = 0.0;
    double chi2_statistic = 0.0;
    double chi2_pvalue = 1.0;
    std::uint64_t chi2_dof = 0;
    bool chi2_impossible_cell = false;
    double mean_rounds = 0.0;
    double mean_bits = 0.0;  // exactly 3 * mean_rounds under plain encoding
    double acceptance_rate = 0.0;
    double h_dprime = 0.0;
    double blockcoded_bits = 0.0;
    std::uint64_t total_bits_a_to_b = 0;
    std::uint64_t total_bits_b_to_a = 0;
    std::vector<std::uint64_t> round_histogram{};
};

RunReport aggregate(const TranscriptAccumulator& acc, const JointDistribution& oracle_joint,
                    double dprime_entropy);

// Convenience for in-memory transcript batches.
RunReport aggregate(std::span<const Transcript> transcripts,
                    const JointDistribution& oracle_joint, double dprime_entropy);

}  // namespace eprsim
