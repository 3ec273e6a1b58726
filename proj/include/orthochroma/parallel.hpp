#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace orthochroma::par {

/// Worker count: hardware concurrency, capped by ORTHOCHROMA_THREADS when set.
int worker_count();

/// Splits [0, n) into fixed-size chunks and runs fn(chunk_index, begin, end)
/// across workers. Chunk boundaries depend only on n and chunk_size, so
/// callers that merge per-chunk results by index get output independent of
/// the worker count.
template <class Fn>
void for_chunks(std::int64_t n, std::int64_t chunk_size, Fn&& fn) {
    if (n <= 0) return;
    if (chunk_size <= 0) chunk_size = 1;
    const std::int64_t chunks = (n + chunk_size - 1) / chunk_size;
    const int workers = std::min<std::int64_t>(worker_count(), chunks);
    if (workers <= 1) {
        for (std::int64_t ci = 0; ci < chunks; ++ci) {
            fn(ci, ci * chunk_size, std::min(n, (ci + 1) * chunk_size));
        }
        return;
    }
    std::atomic<std::int64_t> next{0};
    auto body = [&] {
        for (;;) {
            std::int64_t ci = next.fetch_add(1);
            if (ci >= chunks) return;
            fn(ci, ci * chunk_size, std::min(n, (ci + 1) * chunk_size));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
}

}  // namespace orthochroma::par
