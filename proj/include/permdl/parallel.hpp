#ifndef PERMDL_PARALLEL_HPP
#define PERMDL_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace permdl::detail {

/// Runs task(i) for i in [0, count) on up to `jobs` threads and returns the
/// results indexed by i, so the output never depends on scheduling.
template <typename Result, typename Task>
std::vector<Result> parallel_map(std::size_t count, int jobs, Task&& task) {
    std::vector<Result> results(count);
    const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = task(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < count; i = next++) results[i] = task(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace permdl::detail

#endif  // PERMDL_PARALLEL_HPP
