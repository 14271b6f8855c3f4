#pragma once

#include <algorithm>
#include <cstdlib>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace fraclap {

// Thread cap: FRACLAP_THREADS env var wins, otherwise hardware concurrency.
inline unsigned thread_budget() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("FRACLAP_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

// Runs fn(begin, end) over fixed-size chunks of [0, count).  Chunk boundaries
// do not depend on the thread count, so per-index outputs are deterministic;
// reductions should accumulate per-chunk partials in index order afterwards.
inline void parallel_for(std::size_t count,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
    if (count == 0) return;
    unsigned nthreads = thread_budget();
    if (nthreads <= 1 || count < 256) {
        fn(0, count);
        return;
    }
    std::size_t chunk = (count + nthreads - 1) / nthreads;
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t begin = 0; begin < count; begin += chunk) {
        std::size_t end = std::min(begin + chunk, count);
        pool.emplace_back(fn, begin, end);
    }
    for (auto& t : pool) t.join();
}

}  // namespace fraclap
