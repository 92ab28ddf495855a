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

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace gaugesim {

/// Fixed chunking that worker count cannot influence: results are produced
/// per chunk of `chunk_size` items and handed back in chunk order, so any
/// floating-point reduction the caller performs over them is bit-identical
/// for 1 thread or 64. Worker functions receive [begin, end) item ranges.
inline constexpr std::size_t default_chunk_size = 16384;

template <typename ChunkResult, typename Fn>
std::vector<ChunkResult> run_chunked(std::uint64_t items, unsigned threads, Fn fn,
                                     std::size_t chunk_size = default_chunk_size) {
    const std::uint64_t chunks = (items + chunk_size - 1) / chunk_size;
    std::vector<ChunkResult> results(static_cast<std::size_t>(chunks));
    if (chunks == 0) return results;

    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || chunks == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) {
            const std::uint64_t begin = c * chunk_size;
            const std::uint64_t end = std::min<std::uint64_t>(items, begin + chunk_size);
            results[static_cast<std::size_t>(c)] = fn(begin, end);
        }
        return results;
    }

    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&]() {
            for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
                const std::uint64_t begin = c * chunk_size;
                const std::uint64_t end = std::min<std::uint64_t>(items, begin + chunk_size);
                results[static_cast<std::size_t>(c)] = fn(begin, end);
            }
        });
    }
    for (std::thread& worker : workers) worker.join();
    return results;
}

}  // namespace gaugesim
