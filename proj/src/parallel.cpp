#include "invstat/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace invstat {

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n_tasks, int workers,
                  const std::function<void(std::size_t, int)>& fn) {
    if (n_tasks == 0) return;
    const int w = std::min<std::size_t>(resolve_workers(workers), n_tasks);
    if (w == 1) {
        for (std::size_t i = 0; i < n_tasks; ++i) fn(i, 0);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(w));
    for (int wi = 0; wi < w; ++wi) {
        pool.emplace_back([&, wi] {
            for (;;) {
                const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= n_tasks) return;
                try {
                    fn(i, wi);
                } catch (...) {
                    {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error) first_error = std::current_exception();
                    }
                    next.store(n_tasks, std::memory_order_relaxed);  // drain remaining work
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace invstat
