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

#include "eprsim/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace eprsim {

std::vector<double> JointDistribution::row_sums() const {
    std::vector<double> r(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j);
    }
    return r;
}

std::vector<double> JointDistribution::col_sums() const {
    std::vector<double> c(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) c[j] += at(i, j);
    }
    return c;
}

double JointDistribution::total() const {
    return std::accumulate(p_.begin(), p_.end(), 0.0);
}

std::vector<double> marginal(const Povm& p) {
    std::vector<double> m(p.weights().begin(), p.weights().end());
    const double sum = std::accumulate(m.begin(), m.end(), 0.0);
    for (double& w : m) w /= sum;
    return m;
}

JointDistribution joint(const Povm& a, const Povm& b) {
    JointDistribution p(a.size(), b.size());
    std::vector<double> cells;
    cells.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            // Cauchy-Schwarz makes this nonnegative; clamp rounding residue.
            const double v =
                std::max(0.0, (a.weight(i) * b.weight(j) + dot(a.element(i), b.element(j))) / 4.0);
            p.at(i, j) = v;
            cells.push_back(v);
        }
    }
    // Total accumulated in sorted order so joint(a,b) and joint(b,a) normalize
    // by the bit-identical constant.
    std::sort(cells.begin(), cells.end());
    const double total = std::accumulate(cells.begin(), cells.end(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) p.at(i, j) /= total;
    }
    return p;
}

double correlation(const UnitVec3& a_dir, const UnitVec3& b_dir) {
    const JointDistribution p = joint(Povm::projective(a_dir), Povm::projective(b_dir));
    return p.at(0, 0) - p.at(0, 1) - p.at(1, 0) + p.at(1, 1);
}

double chsh(const UnitVec3& a, const UnitVec3& a2, const UnitVec3& b, const UnitVec3& b2) {
    return correlation(a, b) + correlation(a, b2) + correlation(a2, b) - correlation(a2, b2);
}

}  // namespace eprsim
