#ifndef NETPERTURB_PARALLEL_HPP
#define NETPERTURB_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace netperturb {

// Worker count resolution: explicit config value > NETPERTURB_WORKERS env
// var > hardware concurrency.
inline int resolve_worker_count(int configured) {
    if (configured > 0) return configured;
    if (const char* env = std::getenv("NETPERTURB_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, task_count) on `workers` threads. Tasks must write
// to disjoint locations; output then cannot depend on scheduling. The first
// exception thrown by any task is rethrown after all threads join.
inline void parallel_for(int task_count, int workers, const std::function<void(int)>& fn) {
    if (task_count <= 0) return;
    if (workers <= 1 || task_count == 1) {
        for (int i = 0; i < task_count; ++i) fn(i);
        return;
    }
    if (workers > task_count) workers = task_count;

    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto body = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= task_count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace netperturb

#endif
