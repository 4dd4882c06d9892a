#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace bgwc {

/// Runs body(worker, item) for item in [0, count), items dealt round-robin to
/// `threads` workers. Results must be merged by the caller in an
/// order-independent way.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
    threads = std::max(1u, threads);
    if (threads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(0u, i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&body, w, workers, count] {
            for (std::size_t i = w; i < count; i += workers) body(w, i);
        });
    }
}

} // namespace bgwc
