#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cipherclimb {

/// Number of OS threads to use for `requested` (0 means one per hardware thread).
inline unsigned resolve_thread_count(unsigned requested, std::size_t jobs)
{
    unsigned threads = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
}

/// Calls fn(worker) for every worker in [0, count) and returns once all calls finished.
///
/// Workers are claimed dynamically, so the thread that runs a given worker is not
/// fixed. Callers keep results scheduling-independent by having each worker write
/// only to its own slot. The first exception thrown by any worker is rethrown.
template <typename Fn>
void run_workers(std::size_t count, unsigned threads, Fn&& fn)
{
    const unsigned pool = resolve_thread_count(threads, count);
    if (pool <= 1) {
        for (std::size_t w = 0; w < count; ++w) {
            fn(w);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto drain = [&] {
        for (std::size_t w = next.fetch_add(1); w < count; w = next.fetch_add(1)) {
            try {
                fn(w);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(count);
            }
        }
    };
    {
        std::vector<std::jthread> crew;
        crew.reserve(pool - 1);
        for (unsigned t = 1; t < pool; ++t) {
            crew.emplace_back(drain);
        }
        drain();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace cipherclimb
