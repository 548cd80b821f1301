#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace drgforge {

/// Worker count: explicit override if set, then DRGFORGE_THREADS, then
/// hardware concurrency.
int thread_count();

/// Programmatic override (e.g. a --threads flag); pass 0 to clear.
void set_thread_count_override(int count);

/// Runs f(i) for i in [0, n). Work is distributed dynamically in chunks;
/// f must write results only to slots owned by index i so the outcome is
/// deterministic regardless of scheduling.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& f);

/// Chunked variant: f(begin, end) over disjoint ranges covering [0, n).
void parallel_for_ranges(std::int64_t n, std::int64_t chunk,
                         const std::function<void(std::int64_t, std::int64_t)>& f);

}  // namespace drgforge
