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

#include "eprsim/bloch.hpp"

#include <cmath>
#include <stdexcept>

namespace eprsim {

UnitVec3::UnitVec3(const Vec3& v) : v_(v) {
    if (!finite(v)) {
        throw std::invalid_argument("UnitVec3: components must be finite");
    }
    if (std::abs(dot(v, v) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("UnitVec3: squared norm deviates from 1 by more than 1e-12");
    }
}

UnitVec3 UnitVec3::normalized(const Vec3& v) {
    if (!finite(v)) {
        throw std::invalid_argument("UnitVec3: components must be finite");
    }
    const double n = norm(v);
    if (n == 0.0) {
        throw std::invalid_argument("UnitVec3: cannot normalize a zero vector");
    }
    return UnitVec3{v * (1.0 / n), unchecked_tag{}};
}

UnitVec3 sample_unit_vector(Rng& rng) {
    std::normal_distribution<double> gauss;
    while (true) {
        const Vec3 g{gauss(rng), gauss(rng), gauss(rng)};
        const double n2 = dot(g, g);
        if (n2 > 1e-300) {
            return UnitVec3{g * (1.0 / std::sqrt(n2)), UnitVec3::unchecked_tag{}};
        }
    }
}

Rotation Rotation::about_axis(const UnitVec3& axis, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double t = 1.0 - c;
    const double ux = axis.x(), uy = axis.y(), uz = axis.z();
    Rotation r;
    r.m_ = {c + ux * ux * t,      ux * uy * t - uz * s, ux * uz * t + uy * s,
            uy * ux * t + uz * s, c + uy * uy * t,      uy * uz * t - ux * s,
            uz * ux * t - uy * s, uz * uy * t + ux * s, c + uz * uz * t};
    return r;
}

}  // namespace eprsim
