#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace l5scd {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Applies fn to 0..count-1 on up to `threads` workers; results land in index
/// order, so output never depends on scheduling. The first exception (by
/// index) is rethrown on the calling thread.
template <typename Fn>
auto parallel_map(std::size_t count, unsigned threads, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{}))> {
    using Result = decltype(fn(std::size_t{}));
    std::vector<Result> results(count);
    std::vector<std::exception_ptr> errors(count);
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));

    std::atomic<std::size_t> next{0};
    auto drain = [&] {
        for (std::size_t idx = next++; idx < count; idx = next++) {
            try {
                results[idx] = fn(idx);
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        }
    };

    if (workers <= 1) {
        drain();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(drain);
    }

    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace l5scd
