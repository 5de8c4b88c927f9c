/*
 Copyright 2026 The hexplace authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#pragma once

#include <array>
#include <cstdint>

namespace hexplace {

// xoshiro256++ (Blackman and Vigna), state seeded through splitmix64.
//
// This is the reproducibility contract of the whole simulator: a simulation
// consumes exactly one RngStream in a documented phase and agent order, so
// equal seeds give bit-identical trajectories on every platform. Doubles are
// taken from the top 53 bits of the next 64-bit output,
//     (x >> 11) * 2^-53,
// which lies in [0, 1). Bounded integers use the 128-bit multiply-shift
// reduction, consuming one 64-bit output per value.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) {
        // splitmix64, the conventional seeding for the xoshiro family.
        std::uint64_t x = seed;
        for (auto& word : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // True with probability p. Always consumes one draw.
    bool bernoulli(double p) { return next_double() < p; }

    // Uniform in [0, n), n >= 1. Always consumes one draw.
    std::uint64_t bounded(std::uint64_t n) {
        const unsigned __int128 m =
            static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(n);
        return static_cast<std::uint64_t>(m >> 64);
    }

  private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

}  // namespace hexplace
