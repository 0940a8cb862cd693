#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ricci {

/// Thread cap: min(hardware_concurrency, RICCI_THREADS); 1 disables threading.
inline unsigned thread_budget()
{
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("RICCI_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    return hw;
}

/// Run fn(i) for i in [0, count); results must be written to index i of a
/// pre-sized container so the aggregation is order-independent.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn)
{
    const unsigned threads = thread_budget();
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace ricci
