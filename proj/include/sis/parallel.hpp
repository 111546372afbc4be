// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sis-sim contributors

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sis {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(task_index, worker_index) for task_index in [0, n_tasks). Tasks are
// claimed through an atomic counter; results must be written to task-indexed
// slots so the outcome is independent of scheduling.
template <typename Fn>
void parallel_for_tasks(std::size_t n_tasks, int n_threads, Fn&& fn) {
    n_threads = resolve_threads(n_threads);
    if (n_threads <= 1 || n_tasks <= 1) {
        for (std::size_t i = 0; i < n_tasks; ++i) fn(i, 0);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&](int worker_index) {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n_tasks) return;
            try {
                fn(i, worker_index);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(n_tasks);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace sis
