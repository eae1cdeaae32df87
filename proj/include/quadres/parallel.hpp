#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace quadres {

/// Worker count: QUADRES_THREADS if set, else hardware concurrency.
int worker_count();

/// Run fn(i) for i in [0, count) on a bounded pool. Callers keep determinism
/// by writing results into preallocated slots indexed by i.
template <typename F>
void parallel_for(std::size_t count, F&& fn, int threads = 0) {
    if (threads <= 0) threads = worker_count();
    const std::size_t n_workers =
        std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    if (n_workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace quadres
