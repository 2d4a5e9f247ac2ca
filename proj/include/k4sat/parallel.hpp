#pragma once

// Minimal worker pool for the sweeps: workers pull indices from an atomic
// counter, exceptions are captured and rethrown on the caller thread.
// Callers own determinism by merging per-index results in index order.

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace k4sat::detail {

// fn(index, worker) for every index in [0, count).
template <typename Fn>
inline void parallel_for_index(std::size_t count, int workers, Fn&& fn) {
    if (workers < 1) workers = 1;
    if (static_cast<std::size_t>(workers) > count && count > 0) workers = static_cast<int>(count);

    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i, 0);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= count) break;
                    fn(i, w);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
                next.store(count);  // drain remaining work
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace k4sat::detail
