#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace kaprekar {

/// Chunked parallel loop. Each index is processed exactly once and results
/// must be written to per-index slots, so output is identical to a serial run.
template <typename F>
void parallel_for(int n, F&& fn) {
    // at least two workers so the concurrent path is always exercised
    int workers = static_cast<int>(std::min(8u, std::max(2u, std::thread::hardware_concurrency())));
    if (n < 128) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    const int chunk = std::max(16, n / (workers * 8));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (;;) {
                int start = next.fetch_add(chunk);
                if (start >= n) return;
                int end = std::min(n, start + chunk);
                for (int i = start; i < end; ++i) fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

} // namespace kaprekar
