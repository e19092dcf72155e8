#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace supercong {

/// Evaluates task(0) .. task(count-1) on up to `jobs` threads and returns the
/// results in index order, so the output never depends on scheduling. The
/// first exception thrown by any task is rethrown after all workers join.
template <typename Task>
auto parallel_map(std::size_t count, unsigned jobs, Task task)
    -> std::vector<std::invoke_result_t<Task&, std::size_t>>
{
    using Result = std::invoke_result_t<Task&, std::size_t>;
    std::vector<Result> results(count);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(jobs, 1U), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            results[i] = task(i);
        }
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < count; i = next++) {
                    results[i] = task(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
                next = count;
            }
        });
    }
    for (auto& t : threads) {
        t.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return results;
}

} // namespace supercong
