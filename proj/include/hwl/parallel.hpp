#pragma once

// Deterministic-by-construction parallelism: work splits into contiguous
// chunks, one result slot per chunk, and callers merge slots in chunk order.
// Worker count never changes results.

#include <cstdint>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hwl {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

// fn(chunk_index, begin, end) over a partition of [0, total); exceptions are
// collected and the first (by chunk index) is rethrown after the join
template <class Fn>
void parallel_ranges(std::int64_t total, int threads, Fn fn) {
    threads = resolve_threads(threads);
    if (total <= 0) return;
    if (std::int64_t(threads) > total) threads = int(total);
    if (threads <= 1) {
        fn(0, std::int64_t(0), total);
        return;
    }
    std::vector<std::exception_ptr> errs(std::size_t(threads), nullptr);
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(threads));
    const std::int64_t base = total / threads, rem = total % threads;
    std::int64_t begin = 0;
    for (int c = 0; c < threads; ++c) {
        const std::int64_t len = base + (c < rem ? 1 : 0);
        const std::int64_t b = begin, e = begin + len;
        pool.emplace_back([&, c, b, e] {
            try {
                fn(c, b, e);
            } catch (...) {
                errs[std::size_t(c)] = std::current_exception();
            }
        });
        begin += len;
    }
    for (auto& t : pool) t.join();
    for (auto& err : errs)
        if (err) std::rethrow_exception(err);
}

} // namespace hwl
