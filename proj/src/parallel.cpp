#include "srgeo/parallel.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace srgeo {

int worker_count() {
    static const int count = [] {
        if (const char* env = std::getenv("SRGEO_THREADS")) {
            const int v = std::atoi(env);
            if (v >= 1) return v;
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }();
    return count;
}

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
    const std::size_t total = end > begin ? end - begin : 0;
    if (total == 0) return;
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(worker_count()), total);
    if (workers <= 1) {
        fn(begin, end);
        return;
    }
    const std::size_t chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) {
        const std::size_t lo = begin + w * chunk;
        const std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    fn(begin, std::min(end, begin + chunk));
    for (auto& t : pool) t.join();
}

}  // namespace srgeo
