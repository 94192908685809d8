#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace cyclospec {

/// Default degree of parallelism: $CYCLOSPEC_JOBS when set to a positive
/// integer, otherwise the hardware concurrency.
inline std::size_t default_jobs() {
    if (const char* env = std::getenv("CYCLOSPEC_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Evaluates fn(i) for i in [0, count) on up to `jobs` threads. Results are
/// stored by index, so the output never depends on scheduling. If any call
/// throws, the exception of the lowest failing index is rethrown.
template <typename Fn>
auto parallel_map(std::size_t count, std::size_t jobs, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
    using R = std::invoke_result_t<Fn&, std::size_t>;
    std::vector<std::optional<R>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t n_threads = std::min(std::max<std::size_t>(jobs, 1), count);
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::vector<R> out;
    out.reserve(count);
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

}  // namespace cyclospec
