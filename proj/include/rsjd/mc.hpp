#pragma once

#include <cstdint>
#include <thread>
#include <vector>

#include "rsjd/rng.hpp"

namespace rsjd {

inline int default_thread_count() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(path_index, engine) for every path in [0, n_paths). Each path gets
// its own engine from path_rng(seed, index), so results are a pure function of
// (seed, index): callers write into preallocated per-index slots and reduce in
// index order, which makes aggregates independent of the thread count.
template <class Fn>
void for_each_path(std::uint64_t n_paths, std::uint64_t seed, int n_threads, Fn&& fn) {
    if (n_threads <= 0) n_threads = default_thread_count();
    if (n_threads == 1 || n_paths < 2) {
        for (std::uint64_t p = 0; p < n_paths; ++p) {
            RngEngine rng = path_rng(seed, p);
            fn(p, rng);
        }
        return;
    }
    const std::uint64_t workers =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(n_threads), n_paths);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            const std::uint64_t lo = n_paths * w / workers;
            const std::uint64_t hi = n_paths * (w + 1) / workers;
            for (std::uint64_t p = lo; p < hi; ++p) {
                RngEngine rng = path_rng(seed, p);
                fn(p, rng);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace rsjd
