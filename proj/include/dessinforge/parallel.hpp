#ifndef DESSINFORGE_PARALLEL_HPP
#define DESSINFORGE_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace dessinforge {

// Runs fn(begin, end) over a partition of [0, total) using `workers` threads.
// Callers are responsible for making the chunks write to disjoint state; the
// partition is contiguous so results are independent of scheduling.
template <typename Fn>
void parallel_for_chunks(std::int64_t total, int workers, Fn&& fn) {
    if (total <= 0) return;
    if (workers < 1) workers = 1;
    if (workers == 1 || total < 16384) {
        fn(std::int64_t{0}, total);
        return;
    }
    const int nthreads = static_cast<int>(std::min<std::int64_t>(workers, total));
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    const std::int64_t chunk = (total + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
        const std::int64_t lo = t * chunk;
        const std::int64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

inline int default_workers() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

} // namespace dessinforge

#endif
