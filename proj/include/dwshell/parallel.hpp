#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace dwshell {

/// Worker count: DWSHELL_THREADS caps parallelism, 0 or unset = auto.
inline unsigned thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("DWSHELL_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v) < hw ? static_cast<unsigned>(v) : hw;
    }
    return hw;
}

/// Static block partition of [0, count); results must be written to
/// preallocated per-index slots so reductions stay deterministic.
inline void parallel_for(size_t count, const std::function<void(size_t)>& body) {
    const unsigned workers = thread_count();
    if (workers <= 1 || count < 2 * workers) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const size_t lo = w * chunk;
        const size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace dwshell
