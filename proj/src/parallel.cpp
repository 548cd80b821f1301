#include "drgforge/parallel.hpp"

#include <algorithm>
#include <cstdlib>

namespace drgforge {

namespace {
std::atomic<int> g_thread_override{0};
}

void set_thread_count_override(int count) { g_thread_override.store(count); }

int thread_count() {
    const int forced = g_thread_override.load();
    if (forced >= 1) return std::min(forced, 256);
    if (const char* env = std::getenv("DRGFORGE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(std::min(v, 256L));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for_ranges(std::int64_t n, std::int64_t chunk,
                         const std::function<void(std::int64_t, std::int64_t)>& f) {
    if (n <= 0) return;
    const int workers = std::min<std::int64_t>(thread_count(), (n + chunk - 1) / chunk);
    if (workers <= 1) {
        f(0, n);
        return;
    }
    std::atomic<std::int64_t> next{0};
    auto run = [&] {
        for (;;) {
            const std::int64_t begin = next.fetch_add(chunk);
            if (begin >= n) return;
            f(begin, std::min(begin + chunk, n));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& f) {
    const std::int64_t chunk = std::max<std::int64_t>(1, n / (8 * std::max(1, thread_count())));
    parallel_for_ranges(n, chunk, [&](std::int64_t b, std::int64_t e) {
        for (std::int64_t i = b; i < e; ++i) f(i);
    });
}

}  // namespace drgforge
