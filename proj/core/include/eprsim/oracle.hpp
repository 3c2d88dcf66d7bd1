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

#include <cstddef>
#include <vector>

#include "eprsim/bloch.hpp"
#include "eprsim/povm.hpp"

// Exact outcome statistics for bipartite POVM measurement of the maximally
// entangled two-qubit state (|00> + |11>)/sqrt(2): the ground truth the
// classical protocol has to reproduce.

namespace eprsim {

class JointDistribution {
  public:
    JointDistribution(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), p_(rows * cols, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return p_[i * cols_ + j]; }
    double at(std::size_t i, std::size_t j) const { return p_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::vector<double> row_sums() const;
    std::vector<double> col_sums() const;
    double total() const;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> p_;
};

// Outcome probabilities |b_i|/2, renormalized by their sum.
std::vector<double> marginal(const Povm& p);

// Joint outcome distribution p[i][j] = (|a_i||b_j| + a_i . b_j)/4,
// renormalized by the total.
JointDistribution joint(const Povm& a, const Povm& b);

// Expectation of the +-1-valued outcome product for projective measurements
// along a_dir and b_dir (outcome +1 for element 0, -1 for element 1).
// Analytically equals a_dir . b_dir.
double correlation(const UnitVec3& a_dir, const UnitVec3& b_dir);

// CHSH combination corr(a,b) + corr(a,b2) + corr(a2,b) - corr(a2,b2).
double chsh(const UnitVec3& a, const UnitVec3& a2, const UnitVec3& b, const UnitVec3& b2);

}  // namespace eprsim
