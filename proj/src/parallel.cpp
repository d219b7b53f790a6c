#include "tensorgen/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace tensorgen {

namespace {
int g_threads = 1;
}

void set_num_threads(int n) { g_threads = n < 1 ? 1 : n; }
int num_threads() { return g_threads; }

void for_each_block(std::int64_t n, std::int64_t block_size,
                    const std::function<void(std::size_t, std::int64_t, std::int64_t)>& fn) {
    if (n <= 0) return;
    const std::int64_t nblocks = (n + block_size - 1) / block_size;
    auto run_block = [&](std::int64_t b) {
        const std::int64_t lo = b * block_size;
        const std::int64_t hi = lo + block_size < n ? lo + block_size : n;
        fn(static_cast<std::size_t>(b), lo, hi);
    };
    const int workers = g_threads;
    if (workers == 1 || nblocks == 1) {
        for (std::int64_t b = 0; b < nblocks; ++b) run_block(b);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    const int spawn = static_cast<int>(workers < nblocks ? workers : nblocks);
    pool.reserve(spawn);
    for (int t = 0; t < spawn; ++t) {
        pool.emplace_back([&] {
            for (std::int64_t b = next.fetch_add(1); b < nblocks; b = next.fetch_add(1))
                run_block(b);
        });
    }
    for (auto& th : pool) th.join();
}

void for_each_index(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
    for_each_block(n, 1, [&](std::size_t, std::int64_t lo, std::int64_t) { fn(lo); });
}

}  // namespace tensorgen
