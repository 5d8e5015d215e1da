#include "qspace/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qspace {

namespace {
std::atomic<unsigned> g_threads{0};
// Nested loops run serially inside a worker.
thread_local bool t_in_worker = false;
}

void set_thread_count(unsigned n) { g_threads.store(n); }

unsigned thread_count() {
    const unsigned n = g_threads.load();
    if (n != 0) return n;
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min<std::size_t>(thread_count(), n);
    if (workers <= 1 || t_in_worker) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        const bool outer = t_in_worker;
        t_in_worker = true;
        struct Reset {
            bool v;
            ~Reset() { t_in_worker = v; }
        } reset{outer};
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(n);
                return;
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    pool.clear();
    if (error) std::rethrow_exception(error);
}

double pairwise_sum(std::span<const double> values) {
    constexpr std::size_t kLeaf = 32;
    if (values.size() <= kLeaf) {
        double acc = 0.0;
        for (double v : values) acc += v;
        return acc;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace qspace
