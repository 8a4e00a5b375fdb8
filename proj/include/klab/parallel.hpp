#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace klab {

inline unsigned hardware_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Runs fn(begin, end) over disjoint chunks of [0, n). Chunk boundaries are a
// function of n only, never of the thread count, so callers that write to
// disjoint ranges (or reduce per-chunk slots in chunk order) get output
// independent of parallelism.
template <typename Fn>
void parallel_chunks(std::size_t n, Fn&& fn) {
    if (n == 0) return;
    constexpr std::size_t kChunks = 64;
    std::size_t chunk = std::max<std::size_t>(1, (n + kChunks - 1) / kChunks);
    std::size_t nchunks = (n + chunk - 1) / chunk;
    unsigned workers = std::min<std::size_t>(hardware_threads(), nchunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c)
            fn(c * chunk, std::min(n, (c + 1) * chunk));
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t c = next.fetch_add(1);
                if (c >= nchunks) return;
                fn(c * chunk, std::min(n, (c + 1) * chunk));
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace klab
