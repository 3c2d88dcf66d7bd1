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

#include "eprsim/povm.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"

using namespace eprsim;

TEST_CASE("validate accepts an antipodal unit pair") {
    const Povm p = Povm::validated({{0, 0, 1}, {0, 0, -1}}, 1e-12);
    CHECK(p.size() == 2);
    CHECK(p.weight(0) == 1.0);
    CHECK(p.weight(1) == 1.0);
}

TEST_CASE("validate reports which completeness condition failed") {
    auto v1 = Povm::check(std::vector<Vec3>{{0, 0, 1}, {0, 0, 1}}, 1e-6);
    REQUIRE(v1.has_value());
    CHECK(v1->kind == PovmViolation::Kind::vector_sum);
    CHECK(v1->magnitude == doctest::Approx(2.0));

    auto v2 = Povm::check(std::vector<Vec3>{{0, 0, 0.5}, {0, 0, -0.5}}, 1e-6);
    REQUIRE(v2.has_value());
    CHECK(v2->kind == PovmViolation::Kind::weight_sum);
    CHECK(v2->magnitude == doctest::Approx(1.0));

    auto v3 = Povm::check(std::vector<Vec3>{{0, 0, 1}}, 1e-6);
    REQUIRE(v3.has_value());
    CHECK(v3->kind == PovmViolation::Kind::too_few_elements);

    auto v4 = Povm::check(std::vector<Vec3>{{0, 0, std::nan("")}, {0, 0, -1}}, 1e-6);
    REQUIRE(v4.has_value());
    CHECK(v4->kind == PovmViolation::Kind::nonfinite);

    CHECK_THROWS_AS(Povm::validated({{0, 0, 1}, {0, 0, 1}}, 1e-6), PovmValidationError);
}

TEST_CASE("projective builds [n, -n]") {
    const Povm p = Povm::projective(UnitVec3{Vec3{0, 0, 1}});
    CHECK(p.element(0).z == 1.0);
    CHECK(p.element(1).z == -1.0);
    const Povm q = Povm::projective(UnitVec3{Vec3{1, 0, 0}});
    CHECK(q.element(0).x == 1.0);
    CHECK(q.element(1).x == -1.0);

    Rng rng(31);
    for (int k = 0; k < 1000; ++k) {
        const Povm r = Povm::projective(sample_unit_vector(rng));
        CHECK(!Povm::check(r.elements(), 1e-12).has_value());
    }
}

TEST_CASE("sic_tetrahedron satisfies completeness and -1/3 overlaps") {
    const Povm p = Povm::sic_tetrahedron();
    REQUIRE(p.size() == 4);
    CHECK(!Povm::check(p.elements(), 1e-12).has_value());

    double weight_sum = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(p.weight(i) == doctest::Approx(0.5).epsilon(1e-12));
        weight_sum += p.weight(i);
    }
    CHECK(weight_sum == doctest::Approx(2.0).epsilon(1e-12));

    // Unit tetrahedron directions overlap at exactly -1/3.
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            const double tij = dot(p.element(i), p.element(j)) / (p.weight(i) * p.weight(j));
            CHECK(std::abs(tij - (-1.0 / 3.0)) < 1e-12);
        }
    }
}

TEST_CASE("random POVM with n=2 is an antipodal unit pair") {
    Rng rng(7);
    for (int k = 0; k < 100; ++k) {
        const Povm p = Povm::random(2, rng);
        CHECK(std::abs(p.weight(0) - 1.0) < 1e-12);
        CHECK(std::abs(p.weight(1) - 1.0) < 1e-12);
        CHECK(norm(p.element(0) + p.element(1)) < 1e-12);
    }
}

TEST_CASE("random POVM always validates at 1e-9") {
    Rng rng(11);
    for (int n = 2; n <= 8; ++n) {
        for (int k = 0; k < 50; ++k) {
            const Povm p = Povm::random(n, rng);
            CHECK(!Povm::check(p.elements(), 1e-9).has_value());
            // Outcome weights form a probability distribution.
            double half_sum = 0;
            for (std::size_t i = 0; i < p.size(); ++i) half_sum += p.weight(i) / 2.0;
            CHECK(std::abs(half_sum - 1.0) < 5e-10);
        }
    }
    CHECK_THROWS_AS(Povm::random(1, rng), std::invalid_argument);
}

TEST_CASE("random POVM is deterministic per seed") {
    Rng r1(42), r2(42);
    const Povm p = Povm::random(5, r1);
    const Povm q = Povm::random(5, r2);
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(p.element(i).x == q.element(i).x);
        CHECK(p.element(i).y == q.element(i).y);
        CHECK(p.element(i).z == q.element(i).z);
    }
}

TEST_CASE("a rotated valid POVM is still valid") {
    Rng rng(13);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    for (int k = 0; k < 100; ++k) {
        const Povm p = Povm::random(4, rng);
        const Rotation rot = Rotation::about_axis(sample_unit_vector(rng), angle(rng));
        std::vector<Vec3> rotated;
        for (const Vec3& b : p.elements()) rotated.push_back(rot(b));
        CHECK(!Povm::check(rotated, 1e-9).has_value());
    }
}

TEST_CASE("povm json round-trip") {
    const Povm z = read_povm("[[0,0,1],[0,0,-1]]");
    CHECK(z.size() == 2);
    CHECK(z.element(0).z == 1.0);
    CHECK(z.element(1).z == -1.0);

    const Povm sic = Povm::sic_tetrahedron();
    const Povm back = read_povm(write_povm(sic), 1e-9);
    REQUIRE(back.size() == sic.size());
    for (std::size_t i = 0; i < sic.size(); ++i) {
        CHECK(std::abs(back.element(i).x - sic.element(i).x) <= 1e-15);
        CHECK(std::abs(back.element(i).y - sic.element(i).y) <= 1e-15);
        CHECK(std::abs(back.element(i).z - sic.element(i).z) <= 1e-15);
    }
}

TEST_CASE("povm parse errors") {
    CHECK_THROWS_AS(read_povm("not json"), PovmParseError);
    CHECK_THROWS_AS(read_povm("{\"a\":1}"), PovmParseError);
    CHECK_THROWS_AS(read_povm("[[0,0],[0,0,1]]"), PovmParseError);
    CHECK_THROWS_AS(read_povm("[[0,0,\"x\"],[0,0,1]]"), PovmParseError);
    // Valid JSON, invalid POVM.
    CHECK_THROWS_AS(read_povm("[[0,0,1],[0,0,1]]"), PovmValidationError);
    CHECK_THROWS_AS(read_povm_file("/nonexistent/povm.json"), PovmParseError);
}
