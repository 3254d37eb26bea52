#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace ulam {

/// Worker count for the full-space scans.  0 means hardware concurrency.
/// Results never depend on this value: chunks are merged in rank order with
/// exact integer arithmetic.
void set_thread_count(unsigned threads);
unsigned thread_count();

namespace detail {

unsigned effective_threads(std::uint64_t work_items);

}  // namespace detail

/// Splits [0, total) into contiguous chunks, runs fn(lo, hi) per chunk on its
/// own thread, and returns the per-chunk results in chunk order.
template <class Local, class ChunkFn>
std::vector<Local> chunked_scan(std::uint64_t total, ChunkFn&& fn) {
    const unsigned t = detail::effective_threads(total);
    if (t <= 1) {
        std::vector<Local> out;
        out.push_back(fn(std::uint64_t{0}, total));
        return out;
    }
    std::vector<Local> out(t);
    std::vector<std::exception_ptr> errors(t);
    std::vector<std::thread> workers;
    workers.reserve(t);
    const std::uint64_t per = total / t;
    const std::uint64_t extra = total % t;
    std::uint64_t lo = 0;
    for (unsigned i = 0; i < t; ++i) {
        const std::uint64_t hi = lo + per + (i < extra ? 1 : 0);
        workers.emplace_back([&, i, lo, hi] {
            try {
                out[i] = fn(lo, hi);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace ulam
