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
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace eprsim {

std::string PovmViolation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::too_few_elements:
            os << "POVM needs at least 2 elements, got " << static_cast<long>(magnitude);
            break;
        case Kind::nonfinite:
            os << "POVM element " << static_cast<long>(magnitude)
               << " has a non-finite component";
            break;
        case Kind::weight_sum:
            os << "weight sum violates completeness: |sum|b_i| - 2| = " << magnitude;
            break;
        case Kind::vector_sum:
            os << "vector sum violates completeness: ||sum b_i|| = " << magnitude;
            break;
    }
    return os.str();
}

std::optional<PovmViolation> Povm::check(std::span<const Vec3> elements, double eps) {
    if (elements.size() < 2) {
        return PovmViolation{PovmViolation::Kind::too_few_elements,
                             static_cast<double>(elements.size())};
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (!finite(elements[i])) {
            return PovmViolation{PovmViolation::Kind::nonfinite, static_cast<double>(i)};
        }
    }
    double weight_sum = 0.0;
    Vec3 vector_sum{};
    for (const Vec3& b : elements) {
        weight_sum += norm(b);
        vector_sum = vector_sum + b;
    }
    if (std::abs(weight_sum - 2.0) > eps) {
        return PovmViolation{PovmViolation::Kind::weight_sum, std::abs(weight_sum - 2.0)};
    }
    if (norm(vector_sum) > eps) {
        return PovmViolation{PovmViolation::Kind::vector_sum, norm(vector_sum)};
    }
    return std::nullopt;
}

Povm::Povm(std::vector<Vec3> elements) : elements_(std::move(elements)) {
    weights_.reserve(elements_.size());
    cumulative_.reserve(elements_.size());
    double cum = 0.0;
    for (const Vec3& b : elements_) {
        const double w = norm(b);
        weights_.push_back(w);
        cum += w;
        cumulative_.push_back(cum);
    }
}

Povm Povm::validated(std::vector<Vec3> elements, double eps) {
    if (auto v = check(elements, eps)) {
        throw PovmValidationError(*v);
    }
    return Povm(std::move(elements));
}

Povm Povm::projective(const UnitVec3& n) {
    const Vec3 b = UnitVec3::normalized(n.vec()).vec();
    return Povm({b, -b});
}

Povm Povm::sic_tetrahedron() {
    const double s = 0.5 / std::sqrt(3.0);
    return Povm({{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}});
}

Povm Povm::random(int n, Rng& rng) {
    if (n < 2) {
        throw std::invalid_argument("random POVM needs n >= 2 elements");
    }
    while (true) {
        std::vector<Vec3> u;
        u.reserve(n);
        Vec3 mean{};
        for (int k = 0; k < n; ++k) {
            u.push_back(sample_unit_vector(rng).vec());
            mean = mean + u.back();
        }
        mean = mean * (1.0 / n);

        bool degenerate = false;
        double weight_sum = 0.0;
        for (Vec3& b : u) {
            b = b - mean;
            const double w = norm(b);
            if (w < 1e-9) {
                degenerate = true;
                break;
            }
            weight_sum += w;
        }
        if (degenerate) continue;

        const double scale = 2.0 / weight_sum;
        for (Vec3& b : u) b = b * scale;
        return Povm(std::move(u));
    }
}

namespace {

nlohmann::json elements_to_json(const Povm& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Vec3& b : p.elements()) {
        arr.push_back({b.x, b.y, b.z});
    }
    return arr;
}

}  // namespace

Povm read_povm(std::string_view text, double eps) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw PovmParseError(std::string("POVM JSON parse failed: ") + e.what());
    }
    if (!j.is_array()) {
        throw PovmParseError("POVM file must be a JSON array of [x,y,z] triples");
    }
    std::vector<Vec3> elements;
    elements.reserve(j.size());
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 3) {
            throw PovmParseError("each POVM element must be an array of exactly 3 numbers");
        }
        Vec3 b;
        double* comp[3] = {&b.x, &b.y, &b.z};
        for (int k = 0; k < 3; ++k) {
            if (!row[k].is_number()) {
                throw PovmParseError("POVM element components must be numbers");
            }
            *comp[k] = row[k].get<double>();
            if (!std::isfinite(*comp[k])) {
                throw PovmParseError("POVM element components must be finite");
            }
        }
        elements.push_back(b);
    }
    return Povm::validated(std::move(elements), eps);
}

std::string write_povm(const Povm& p) {
    return elements_to_json(p).dump();
}

Povm read_povm_file(const std::string& path, double eps) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw PovmParseError("cannot open POVM file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_povm(buf.str(), eps);
}

}  // namespace eprsim
