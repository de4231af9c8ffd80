#ifndef OSCBOUND_UTIL_HPP
#define OSCBOUND_UTIL_HPP

#include <atomic>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace oscb {

// Run f(0..n-1), each index once, across hardware threads. Callers write
// results into preallocated slots so the output is deterministic.
inline void parallel_for(int n, const std::function<void(int)>& f) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    int workers = std::max(1, std::min(hw, n));
    if (workers == 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mtx;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> g(err_mtx);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace oscb

#endif
