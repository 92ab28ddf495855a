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

#pragma once

#include <array>
#include <cstdint>

namespace gaugesim {

/// Default master seed used by the CLI when neither --seed nor the
/// environment variable is given.
inline constexpr std::uint64_t default_seed = 123456789;

/// Philox4x32-10 counter-based generator (Salmon et al.'s bijection of a
/// 128-bit counter under a 64-bit key). Purely integer arithmetic on fixed
/// widths, so the output is bit-identical on every platform. Known-answer
/// vectors are pinned in the test suite and documented in the README.
struct Philox4x32 {
    static std::array<std::uint32_t, 4> block(const std::array<std::uint32_t, 4>& counter,
                                              const std::array<std::uint32_t, 2>& key);
};

/// A value-type random stream addressed by (master seed, stream id).
/// Draw n of stream s under seed k is a pure function of (k, s, n): the
/// Philox counter holds the draw index in words 0-1 and the stream id in
/// words 2-3, the key holds the seed. Streams can therefore be handed to
/// workers in any order without changing a single draw.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_(stream_id) {}

    /// Uniform on [0, 1) with 53 random bits. Consumes exactly one counter
    /// position.
    double next_uniform() { return to_unit(next_u64()); }

    std::uint64_t next_u64() { return u64_at(index_++); }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_; }
    std::uint64_t draws() const { return index_; }

    /// Random access without advancing the stream.
    std::uint64_t u64_at(std::uint64_t draw_index) const;

    static double to_unit(std::uint64_t bits) {
        return static_cast<double>(bits >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t index_ = 0;
};

/// Stream-id namespacing: experiment-level code gives every trial its own
/// stream, and multi-part experiments keep their trial spaces disjoint by
/// tagging the high bits.
inline std::uint64_t substream(std::uint64_t experiment, std::uint64_t trial) {
    return (experiment << 48) | (trial & 0x0000FFFFFFFFFFFFull);
}

}  // namespace gaugesim
