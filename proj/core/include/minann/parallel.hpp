#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace minann {

// Worker cap from MINANN_THREADS (0 or unset = hardware concurrency).
inline int worker_count()
{
    static const int cached = [] {
        int n = 0;
        if (const char* env = std::getenv("MINANN_THREADS"))
            n = std::atoi(env);
        if (n <= 0)
            n = static_cast<int>(std::thread::hardware_concurrency());
        return std::max(1, n);
    }();
    return cached;
}

// Runs fn(i) for i in [0, n). Work is split into contiguous chunks so that
// workers write disjoint index ranges; results are bitwise independent of
// the worker count.
inline void parallel_for(int n, const std::function<void(int)>& fn)
{
    const int workers = std::min(worker_count(), n);
    if (workers <= 1 || n < 4) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int lo = w * chunk;
        const int hi = std::min(n, lo + chunk);
        if (lo >= hi)
            break;
        pool.emplace_back([lo, hi, &fn] {
            for (int i = lo; i < hi; ++i)
                fn(i);
        });
    }
    for (auto& t : pool)
        t.join();
}

} // namespace minann
