/*
 * Copyright 2026 The gaugesim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gaugesim/random.hpp"

namespace gaugesim {

namespace {

constexpr std::uint32_t multiplier0 = 0xD2511F53u;
constexpr std::uint32_t multiplier1 = 0xCD9E8D57u;
constexpr std::uint32_t weyl0 = 0x9E3779B9u;  // golden ratio
constexpr std::uint32_t weyl1 = 0xBB67AE85u;  // sqrt(3) - 1

struct HiLo {
    std::uint32_t hi;
    std::uint32_t lo;
};

inline HiLo mulhilo(std::uint32_t a, std::uint32_t b) {
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    return {static_cast<std::uint32_t>(product >> 32), static_cast<std::uint32_t>(product)};
}

inline std::array<std::uint32_t, 4> round_once(const std::array<std::uint32_t, 4>& ctr,
                                               const std::array<std::uint32_t, 2>& key) {
    const HiLo p0 = mulhilo(multiplier0, ctr[0]);
    const HiLo p1 = mulhilo(multiplier1, ctr[2]);
    return {p1.hi ^ ctr[1] ^ key[0], p1.lo, p0.hi ^ ctr[3] ^ key[1], p0.lo};
}

}  // namespace

std::array<std::uint32_t, 4> Philox4x32::block(const std::array<std::uint32_t, 4>& counter,
                                               const std::array<std::uint32_t, 2>& key) {
    std::array<std::uint32_t, 4> ctr = counter;
    std::array<std::uint32_t, 2> k = key;
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            k[0] += weyl0;
            k[1] += weyl1;
        }
        ctr = round_once(ctr, k);
    }
    return ctr;
}

std::uint64_t RandomStream::u64_at(std::uint64_t draw_index) const {
    const std::array<std::uint32_t, 4> counter = {
        static_cast<std::uint32_t>(draw_index),
        static_cast<std::uint32_t>(draw_index >> 32),
        static_cast<std::uint32_t>(stream_),
        static_cast<std::uint32_t>(stream_ >> 32),
    };
    const std::array<std::uint32_t, 2> key = {
        static_cast<std::uint32_t>(seed_),
        static_cast<std::uint32_t>(seed_ >> 32),
    };
    const auto out = Philox4x32::block(counter, key);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace gaugesim
