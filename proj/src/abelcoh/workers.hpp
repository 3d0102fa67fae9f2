#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace abelcoh {

/// Runs fn(chunk) for chunk in [0, chunks) on up to `workers` threads and
/// returns the results in chunk order, so reductions over them are
/// deterministic regardless of scheduling. The first exception thrown by any
/// chunk is rethrown on the caller's thread.
template <class R, class F>
std::vector<R> map_chunks(std::size_t chunks, unsigned workers, F&& fn) {
    std::vector<R> results(chunks);
    const std::size_t threads = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(chunks, 1));
    if (threads <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) results[c] = fn(c);
        return results;
    }
    std::mutex mutex;
    std::size_t next = 0;
    std::exception_ptr error;
    auto worker = [&] {
        while (true) {
            std::size_t c;
            {
                std::lock_guard lock(mutex);
                if (next >= chunks || error) return;
                c = next++;
            }
            try {
                results[c] = fn(c);
            } catch (...) {
                std::lock_guard lock(mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    pool.clear();
    if (error) std::rethrow_exception(error);
    return results;
}

} // namespace abelcoh
