// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_PARALLEL_HPP
#define APRANK_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace aprank {

// Worker count for data-parallel loops. 0 selects hardware concurrency.
void set_thread_count(int threads);
int thread_count();

// Fixed-size chunking over [0, total). f(chunk_index, begin, end) must write
// its result into a slot addressed by chunk_index only; chunk boundaries do
// not depend on the thread count, so reductions combined in chunk order are
// deterministic.
inline constexpr std::int64_t kDefaultChunk = 8192;

std::int64_t chunk_count(std::int64_t total, std::int64_t chunk = kDefaultChunk);

void parallel_chunks(std::int64_t total,
                     const std::function<void(std::int64_t, std::int64_t, std::int64_t)>& f,
                     std::int64_t chunk = kDefaultChunk);

} // namespace aprank

#endif
