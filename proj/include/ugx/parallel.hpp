#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ugx {

// Worker count: UGX_THREADS if set (clamped to >= 1), else hardware
// concurrency.
inline int thread_count() {
    if (const char* env = std::getenv("UGX_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(begin, end, worker) over [0, n) split into one contiguous chunk per
// worker. The split depends only on n and the worker count, never on timing,
// so per-chunk accumulators combine deterministically.
inline void parallel_chunks(std::int64_t n,
                            const std::function<void(std::int64_t, std::int64_t, int)>& fn) {
    const int workers = std::min<std::int64_t>(thread_count(), std::max<std::int64_t>(n, 1));
    if (workers <= 1) {
        fn(0, n, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr error;
    std::mutex error_mutex;
    const std::int64_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t begin = std::min<std::int64_t>(w * chunk, n);
        const std::int64_t end = std::min<std::int64_t>(begin + chunk, n);
        pool.emplace_back([&, begin, end, w] {
            try {
                fn(begin, end, w);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace ugx
