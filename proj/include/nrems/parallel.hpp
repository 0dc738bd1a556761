#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace nrems {

/// Runs fn(i) for i in [0, count) over `threads` workers with a static
/// partition. Workers own disjoint index blocks, so output written per index
/// is deterministic regardless of the thread count.
inline void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
    if (count <= 0) {
        return;
    }
    threads = std::max(1, std::min(threads, count));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    const int chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const int begin = t * chunk;
        const int end = std::min(count, begin + chunk);
        pool.emplace_back([&, t, begin, end] {
            try {
                for (int i = begin; i < end; ++i) {
                    fn(i);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (const auto& err : errors) {
        if (err) {
            std::rethrow_exception(err);
        }
    }
}

}  // namespace nrems
