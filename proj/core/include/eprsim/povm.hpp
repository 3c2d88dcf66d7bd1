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

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eprsim/bloch.hpp"
#include "eprsim/rng.hpp"

// Qubit POVMs represented by their Bloch vectors b_i: |b_i| is the outcome
// weight, the direction is the measurement axis. A valid POVM satisfies the
// completeness conditions sum |b_i| = 2 and sum b_i = 0.

namespace eprsim {

struct PovmViolation {
    enum class Kind {
        too_few_elements,  // fewer than 2 elements
        nonfinite,         // a component is NaN or infinite
        weight_sum,        // |sum |b_i| - 2| > eps
        vector_sum,        // ||sum b_i|| > eps
    };
    Kind kind;
    double magnitude = 0.0;  // size of the violation (count for too_few_elements)

    std::string describe() const;
};

class PovmValidationError : public std::runtime_error {
  public:
    explicit PovmValidationError(const PovmViolation& v)
        : std::runtime_error(v.describe()), violation(v) {}
    PovmViolation violation;
};

class PovmParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class Povm {
  public:
    static constexpr double kUserEps = 1e-6;      // tolerance for user-supplied files
    static constexpr double kInternalEps = 1e-9;  // tolerance for constructed POVMs

    // Checks the completeness conditions; nullopt means valid.
    static std::optional<PovmViolation> check(std::span<const Vec3> elements, double eps);

    // Validating constructor; throws PovmValidationError naming the failed
    // condition and by how much.
    static Povm validated(std::vector<Vec3> elements, double eps = kUserEps);

    // Two-outcome projective measurement along n: elements [n, -n].
    static Povm projective(const UnitVec3& n);

    // Symmetric 4-outcome POVM with Bloch vectors t_i/2 at the unit
    // tetrahedron directions.
    static Povm sic_tetrahedron();

    // n-outcome POVM from n uniform directions, centered and rescaled so both
    // completeness conditions hold by construction. Draws where any centered
    // vector has norm < 1e-9 are resampled.
    static Povm random(int n, Rng& rng);

    std::size_t size() const { return elements_.size(); }
    const Vec3& element(std::size_t i) const { return elements_[i]; }
    double weight(std::size_t i) const { return weights_[i]; }  // |b_i|
    std::span<const Vec3> elements() const { return elements_; }
    std::span<const double> weights() const { return weights_; }
    double weight_total() const { return cumulative_.empty() ? 0.0 : cumulative_.back(); }
    std::span<const double> cumulative_weights() const { return cumulative_; }

  private:
    Povm(std::vector<Vec3> elements);

    std::vector<Vec3> elements_;
    std::vector<double> weights_;
    std::vector<double> cumulative_;
};

// POVM file format: UTF-8 JSON, one array of n >= 2 arrays of exactly 3
// finite numbers, e.g. [[0,0,1],[0,0,-1]]. read_povm validates with `eps`.
Povm read_povm(std::string_view text, double eps = Povm::kUserEps);
std::string write_povm(const Povm& p);

Povm read_povm_file(const std::string& path, double eps = Povm::kUserEps);

}  // namespace eprsim
