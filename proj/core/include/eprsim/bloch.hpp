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

#include <array>
#include <cmath>

#include "eprsim/rng.hpp"

// Geometry on and around the Bloch sphere: 3-vectors, unit vectors, the
// Heaviside bit function, and uniform sphere sampling.

namespace eprsim {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

constexpr double dot(const Vec3& u, const Vec3& v) {
    return u.x * v.x + u.y * v.y + u.z * v.z;
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline bool finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// Heaviside step as a bit: theta(x) = 1 iff x >= 0. The x = 0 tie has measure
// zero under continuous sampling; this convention makes (-1)^theta(-t) equal
// to sgn(t) for t != 0.
constexpr int theta(double x) { return x >= 0.0 ? 1 : 0; }

// A vector whose construction guarantees |x^2 + y^2 + z^2 - 1| <= 1e-12.
class UnitVec3 {
  public:
    static constexpr double kNormTolerance = 1e-12;

    explicit UnitVec3(const Vec3& v);

    // Rescales an arbitrary nonzero vector to unit length.
    static UnitVec3 normalized(const Vec3& v);

    const Vec3& vec() const { return v_; }
    operator const Vec3&() const { return v_; }

    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }

  private:
    struct unchecked_tag {};
    UnitVec3(const Vec3& v, unchecked_tag) : v_(v) {}

    Vec3 v_;

    friend UnitVec3 sample_unit_vector(Rng& rng);
};

// Uniform direction on S^2: normalize a triple of independent standard
// normal deviates, rejecting the (measure-zero) near-zero vector.
UnitVec3 sample_unit_vector(Rng& rng);

// (-1)^c v1 + (-1)^d v2, the vector Bob tests his element against.
inline Vec3 signed_combination(int c, int d, const UnitVec3& v1, const UnitVec3& v2) {
    const double sc = (c & 1) ? -1.0 : 1.0;
    const double sd = (d & 1) ? -1.0 : 1.0;
    return v1.vec() * sc + v2.vec() * sd;
}

// Rotation about an axis (Rodrigues form). Used by tests to check rotation
// equivariance; not a general-purpose rotation toolkit.
class Rotation {
  public:
    static Rotation about_axis(const UnitVec3& axis, double angle);

    Vec3 operator()(const Vec3& v) const {
        return {m_[0] * v.x + m_[1] * v.y + m_[2] * v.z,
                m_[3] * v.x + m_[4] * v.y + m_[5] * v.z,
                m_[6] * v.x + m_[7] * v.y + m_[8] * v.z};
    }
    UnitVec3 operator()(const UnitVec3& u) const { return UnitVec3::normalized((*this)(u.vec())); }

  private:
    std::array<double, 9> m_{};  // row-major
};

}  // namespace eprsim
