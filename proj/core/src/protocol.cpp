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

#include "eprsim/protocol.hpp"

#include <algorithm>

namespace eprsim {

int sample_outcome(const Povm& p, Rng& rng) {
    const auto cum = p.cumulative_weights();
    std::uniform_real_distribution<double> unif(0.0, cum.back());
    const double u = unif(rng);
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    // u == cum.back() cannot survive upper_bound; step back onto the last
    // positive-weight element just in case rounding produces it.
    std::size_t i = (it == cum.end()) ? cum.size() - 1 : static_cast<std::size_t>(it - cum.begin());
    while (i > 0 && p.weight(i) == 0.0) --i;
    return static_cast<int>(i);
}

}  // namespace eprsim
