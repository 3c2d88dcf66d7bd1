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
#include <random>

// Seeded, parallelizable randomness. All Monte Carlo work derives an
// independent engine per (master seed, domain, index) triple, so run k of a
// batch produces the same draws no matter which thread executes it.

namespace eprsim {

using Rng = std::mt19937_64;

// Domain tags keep unrelated consumers of the same master seed on disjoint
// streams.
inline constexpr std::uint64_t kDomainProtocolRun = 1;
inline constexpr std::uint64_t kDomainEntropy = 2;
inline constexpr std::uint64_t kDomainPovmA = 3;
inline constexpr std::uint64_t kDomainPovmB = 4;
inline constexpr std::uint64_t kDomainChshBase = 8;  // +0..3, one per setting pair

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Stream seed for substream `index` of `domain` under `master`. Two rounds of
// SplitMix64 mixing; collisions between distinct (domain, index) pairs are as
// likely as 64-bit hash collisions.
constexpr std::uint64_t substream_seed(std::uint64_t master, std::uint64_t domain,
                                       std::uint64_t index) {
    return splitmix64(splitmix64(master + 0x9E3779B97F4A7C15ULL * (domain + 1)) + index);
}

inline Rng make_rng(std::uint64_t master, std::uint64_t domain, std::uint64_t index = 0) {
    return Rng{substream_seed(master, domain, index)};
}

}  // namespace eprsim
