#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace eulercong {

// Strided partition of [0, count) over a fixed thread pool. f(i) must
// not touch shared mutable state; results should go into slot i of a
// preallocated vector so the caller can emit them in index order.
template <class F>
void parallel_for(std::uint64_t count, unsigned threads, F&& f) {
    if (threads <= 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) f(i);
        return;
    }
    const unsigned nt = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, count));
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (unsigned t = 0; t < nt; ++t)
        pool.emplace_back([&f, t, nt, count] {
            for (std::uint64_t i = t; i < count; i += nt) f(i);
        });
    for (auto& th : pool) th.join();
}

inline unsigned default_parallelism() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

}  // namespace eulercong
