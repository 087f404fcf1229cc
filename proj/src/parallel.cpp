#include "padicmf/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace padicmf {

namespace {
std::atomic<int> g_threads{1};
}

void set_thread_count(int n) { g_threads.store(std::max(n, 1)); }

int thread_count() { return g_threads.load(); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body)
{
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::exception_ptr first;
    std::mutex guard;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    // Static interleaved partition: worker w takes i = w, w + workers, ...
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers)
                    body(i);
            } catch (...) {
                std::lock_guard lock(guard);
                if (!first)
                    first = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (first)
        std::rethrow_exception(first);
}

} // namespace padicmf
