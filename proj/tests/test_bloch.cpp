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
#include <cstdint>
#include <stdexcept>

#include "doctest.h"

using namespace eprsim;

TEST_CASE("theta is the right-closed Heaviside bit") {
    CHECK(theta(0.5) == 1);
    CHECK(theta(-0.3) == 0);
    CHECK(theta(0.0) == 1);
    CHECK(theta(-0.0) == 1);
}

TEST_CASE("theta(-x) == 1 - theta(x) away from the tie") {
    Rng rng(123);
    std::uniform_real_distribution<double> unif(-10.0, 10.0);
    int mismatches = 0;
    for (int k = 0; k < 100000; ++k) {
        double x = unif(rng);
        if (x == 0.0) continue;
        mismatches += theta(-x) != 1 - theta(x);
    }
    CHECK(mismatches == 0);
}

TEST_CASE("dot product basics") {
    CHECK(dot({0, 0, 1}, {0, 0, 1}) == 1.0);
    CHECK(dot({1, 0, 0}, {0, 1, 0}) == 0.0);
    CHECK(dot({0, 0, 1}, {0, 0, -1}) == -1.0);
}

TEST_CASE("signed_combination applies (-1)^c and (-1)^d") {
    const UnitVec3 z{Vec3{0, 0, 1}};
    const UnitVec3 x{Vec3{1, 0, 0}};
    const UnitVec3 y{Vec3{0, 1, 0}};

    Vec3 r = signed_combination(0, 0, z, z);
    CHECK(r.x == 0.0);
    CHECK(r.z == 2.0);

    r = signed_combination(1, 0, x, y);
    CHECK(r.x == -1.0);
    CHECK(r.y == 1.0);
    CHECK(r.z == 0.0);

    r = signed_combination(1, 1, z, z);
    CHECK(r.z == -2.0);
}

TEST_CASE("UnitVec3 enforces unit norm at construction") {
    CHECK_NOTHROW((UnitVec3{Vec3{0, 0, 1}}));
    CHECK_THROWS_AS((UnitVec3{Vec3{0, 0, 1.1}}), std::invalid_argument);
    CHECK_THROWS_AS((UnitVec3{Vec3{0, 0, 0}}), std::invalid_argument);
    const double nan = std::nan("");
    CHECK_THROWS_AS((UnitVec3{Vec3{nan, 0, 1}}), std::invalid_argument);

    CHECK_THROWS_AS(UnitVec3::normalized(Vec3{0, 0, 0}), std::invalid_argument);
    const UnitVec3 u = UnitVec3::normalized(Vec3{3, -4, 12});
    CHECK(std::abs(dot(u, u) - 1.0) <= 1e-15);
}

TEST_CASE("sample_unit_vector is deterministic per seed") {
    Rng r1(99), r2(99);
    for (int k = 0; k < 10; ++k) {
        const UnitVec3 a = sample_unit_vector(r1);
        const UnitVec3 b = sample_unit_vector(r2);
        CHECK(a.x() == b.x());
        CHECK(a.y() == b.y());
        CHECK(a.z() == b.z());
    }
}

TEST_CASE("sample_unit_vector is uniform on the sphere") {
    constexpr int n = 1000000;
    Rng rng(2026);
    double sx = 0, sy = 0, sz = 0, szz = 0;
    double worst_norm_error = 0;
    std::uint64_t octants[8] = {};
    for (int k = 0; k < n; ++k) {
        const UnitVec3 u = sample_unit_vector(rng);
        sx += u.x();
        sy += u.y();
        sz += u.z();
        szz += u.z() * u.z();
        worst_norm_error = std::max(worst_norm_error, std::abs(dot(u, u) - 1.0));
        const int oct = (u.x() >= 0) | ((u.y() >= 0) << 1) | ((u.z() >= 0) << 2);
        ++octants[oct];
    }
    CHECK(worst_norm_error <= 1e-12);

    // Component means vanish by symmetry; CLT bound from the spec'd window.
    CHECK(std::abs(sx / n) <= 0.005);
    CHECK(std::abs(sy / n) <= 0.005);
    CHECK(std::abs(sz / n) <= 0.005);

    // E[z^2] = 1/3 for the uniform sphere measure.
    CHECK(szz / n >= 0.330);
    CHECK(szz / n <= 0.337);

    // Each octant holds n/8 within 5 binomial sigma.
    const double sigma = std::sqrt(n * (1.0 / 8.0) * (7.0 / 8.0));
    for (std::uint64_t c : octants) {
        CHECK(std::abs(static_cast<double>(c) - n / 8.0) <= 5.0 * sigma);
    }
}

TEST_CASE("rotation preserves angles and maps known directions") {
    const UnitVec3 xhat{Vec3{1, 0, 0}};
    const UnitVec3 zhat{Vec3{0, 0, 1}};
    const Rotation quarter = Rotation::about_axis(xhat, std::acos(-1.0) / 2.0);
    const Vec3 r = quarter(zhat.vec());
    CHECK(std::abs(r.x - 0.0) < 1e-15);
    CHECK(std::abs(r.y - -1.0) < 1e-15);
    CHECK(std::abs(r.z - 0.0) < 1e-15);

    Rng rng(5);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    for (int k = 0; k < 1000; ++k) {
        const Rotation rot = Rotation::about_axis(sample_unit_vector(rng), angle(rng));
        const UnitVec3 u = sample_unit_vector(rng);
        const UnitVec3 v = sample_unit_vector(rng);
        CHECK(std::abs(dot(rot(u.vec()), rot(v.vec())) - dot(u, v)) < 1e-12);
        CHECK(std::abs(norm(rot(u.vec())) - 1.0) < 1e-12);
    }
}
