#pragma once

#include <cstddef>
#include <functional>

namespace radsol::par {

// Number of worker threads: RADSOL_THREADS if set (clamped to [1, 64]),
// otherwise the hardware concurrency.
int max_threads();

// Runs body(lo, hi) over a static partition of [0, n) into fixed-size chunks.
// The partition depends only on n and chunk_size, never on the thread count,
// so chunk-indexed partial results can be combined in a fixed order and the
// final answer is byte-identical for any RADSOL_THREADS setting.
// Chunks are processed inline when n is small or only one thread is available.
void for_chunks(std::size_t n, std::size_t chunk_size,
                const std::function<void(std::size_t lo, std::size_t hi, std::size_t chunk_index)>& body);

// Number of chunks the partition above produces.
std::size_t chunk_count(std::size_t n, std::size_t chunk_size);

}  // namespace radsol::par
