#ifndef EQUICONES_PARALLEL_HPP
#define EQUICONES_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace equicones {

/* EQUICONES_THREADS: unset/1 = serial, 0 = hardware concurrency. */
inline int thread_count()
{
    const char* env = std::getenv("EQUICONES_THREADS");
    if (!env || !*env) return 1;
    int n = std::atoi(env);
    if (n == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
    return n < 1 ? 1 : n;
}

/* Index-space parallel map; results are merged by index so output order is
 * independent of the thread count. */
template <typename F>
void parallel_for(std::size_t n, F&& f)
{
    int threads = thread_count();
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
    for (int t = 0; t < threads; ++t) {
        std::size_t lo = static_cast<std::size_t>(t) * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace equicones

#endif
