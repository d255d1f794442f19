#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace domlab {

/// Evaluates fn(i) for i in [0, count) on up to `workers` threads and returns
/// the results in index order, so output never depends on the worker count.
/// The first exception thrown by any task is rethrown.
template <typename F>
auto parallel_map(std::size_t count, unsigned workers, F&& fn)
{
    using Result = decltype(fn(std::size_t{0}));
    std::vector<Result> out(count);
    workers = std::max(1U, workers);
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        out[i] = fn(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                    }
                }
            });
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

}  // namespace domlab
