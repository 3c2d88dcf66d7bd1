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

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "eprsim/bloch.hpp"
#include "eprsim/povm.hpp"
#include "eprsim/rng.hpp"

// The classical two-party protocol that reproduces bipartite POVM statistics
// on a maximally entangled pair from shared random unit vectors plus
// communication.
//
// One round, on the wire: Alice sends bits (c, d), Bob answers one accept
// bit; rejection restarts with fresh shared vectors. Expected cost is two
// rounds of 3 bits each. Draw order per round is pinned for reproducibility:
// v1, v2, Alice's outcome, Bob's outcome.

namespace eprsim {

struct SharedRandomness {
    UnitVec3 v1;
    UnitVec3 v2;
};

struct Transcript {
    int outcome_a = -1;
    int outcome_b = -1;
    std::uint64_t rounds = 0;
    std::uint64_t bits_a_to_b = 0;  // 2 per round: c then d
    std::uint64_t bits_b_to_a = 0;  // 1 per round: accept flag
    std::uint64_t dprime_ones = 0;  // rounds where the recoded second bit was 1

    std::uint64_t total_bits() const { return bits_a_to_b + bits_b_to_a; }
};

struct AliceBits {
    int c;
    int d;
};

class MaxRoundsExceeded : public std::runtime_error {
  public:
    MaxRoundsExceeded(std::uint64_t rounds, std::uint64_t run_index = 0)
        : std::runtime_error("protocol did not accept within " + std::to_string(rounds) +
                             " rounds (run " + std::to_string(run_index) + ")"),
          rounds_attempted(rounds),
          run_index(run_index) {}

    std::uint64_t rounds_attempted;
    std::uint64_t run_index;
};

inline constexpr int kDefaultMaxRounds = 10000;

// Outcome index drawn with probability |b_i| / sum|b_k|. Zero-weight elements
// are never drawn.
int sample_outcome(const Povm& p, Rng& rng);

// c = theta(-a_i.v1), d = theta(-a_i.v2).
inline AliceBits alice_round(const Povm& a, int i, const SharedRandomness& s) {
    const Vec3& ai = a.element(static_cast<std::size_t>(i));
    return {theta(-dot(ai, s.v1)), theta(-dot(ai, s.v2))};
}

// Bob's accept bit: 1 iff b_j . ((-1)^c v1 + (-1)^d v2) >= 0.
inline int bob_round(const Povm& b, int j, const SharedRandomness& s, int c, int d) {
    return theta(dot(b.element(static_cast<std::size_t>(j)), signed_combination(c, d, s.v1, s.v2)));
}

// Block-coding reformulation of Alice's second bit:
// d' = theta(a_i.v1) XOR theta(a_i.v2). Bob recovers d = c XOR d'.
inline int dprime(const Vec3& a_i, const SharedRandomness& s) {
    return theta(dot(a_i, s.v1)) ^ theta(dot(a_i, s.v2));
}

inline int recover_d(int c, int dp) { return c ^ dp; }

// Expected bits per run when d is replaced by the block-coded d':
// mean_rounds * (1 + h_dprime + 1).
inline double blockcoded_cost(double mean_rounds, double h_dprime) {
    return mean_rounds * (2.0 + h_dprime);
}

// Full restart-until-accept run. `next_shared` supplies the fresh pair of
// shared unit vectors each round; outcome sampling uses `rng`.
template <typename SharedSource>
    requires std::invocable<SharedSource&> &&
             std::convertible_to<std::invoke_result_t<SharedSource&>, SharedRandomness>
Transcript run_protocol(const Povm& a, const Povm& b, SharedSource&& next_shared, Rng& rng,
                        int max_rounds = kDefaultMaxRounds) {
    Transcript t;
    for (int round = 1; round <= max_rounds; ++round) {
        const SharedRandomness s = next_shared();
        const int i = sample_outcome(a, rng);
        const AliceBits msg = alice_round(a, i, s);
        t.bits_a_to_b += 2;
        const int j = sample_outcome(b, rng);
        const int accept = bob_round(b, j, s, msg.c, msg.d);
        t.bits_b_to_a += 1;
        t.rounds += 1;
        t.dprime_ones += static_cast<std::uint64_t>(dprime(a.element(i), s));
        if (accept) {
            t.outcome_a = i;
            t.outcome_b = j;
            return t;
        }
    }
    throw MaxRoundsExceeded(t.rounds);
}

// Convenience overload: shared vectors drawn from the same stream, v1 then v2.
inline Transcript run_protocol(const Povm& a, const Povm& b, Rng& rng,
                               int max_rounds = kDefaultMaxRounds) {
    auto shared_from_rng = [&rng]() -> SharedRandomness {
        UnitVec3 v1 = sample_unit_vector(rng);
        UnitVec3 v2 = sample_unit_vector(rng);
        return {v1, v2};
    };
    return run_protocol(a, b, shared_from_rng, rng, max_rounds);
}

}  // namespace eprsim
