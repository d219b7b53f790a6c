#pragma once

#include <cstdint>
#include <functional>

namespace tensorgen {

/// Process-wide worker count for the block helpers below. Default 1.
void set_num_threads(int n);
int num_threads();

/// Runs fn(block_index, begin, end) over fixed-size blocks of [0, n).
/// Blocks are dispatched to workers but results must be keyed by
/// block_index; callers merge per-block partials in index order, so the
/// outcome is independent of the worker count. Block size is a constant,
/// never derived from the thread count.
void for_each_block(std::int64_t n, std::int64_t block_size,
                    const std::function<void(std::size_t, std::int64_t, std::int64_t)>& fn);

/// Runs fn(i) for i in [0, n) with outputs stored by index by the caller.
void for_each_index(std::int64_t n,
                    const std::function<void(std::int64_t)>& fn);

constexpr std::int64_t kDefaultBlock = 1024;

}  // namespace tensorgen
