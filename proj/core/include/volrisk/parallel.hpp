#pragma once

#include <cstddef>
#include <functional>

namespace volrisk {

/// 0 -> hardware concurrency (at least 1).
unsigned resolve_threads(unsigned requested);

/// Runs fn(block_index, begin, end) over [0, n) in fixed-size blocks claimed
/// from an atomic counter.  Block boundaries depend only on n and block_size,
/// never on the thread count, so per-block results (and anything merged from
/// them in block order) are bitwise reproducible under any worker count.
/// The first exception thrown by a worker is rethrown on the calling thread.
void for_each_block(std::size_t n, std::size_t block_size, unsigned threads,
                    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace volrisk
