#include "ulam/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace ulam {

namespace {
std::atomic<unsigned> g_threads{0};
}

void set_thread_count(unsigned threads) { g_threads.store(threads); }

unsigned thread_count() { return g_threads.load(); }

namespace detail {

unsigned effective_threads(std::uint64_t work_items) {
    unsigned t = g_threads.load();
    if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
    // Below ~64k items the spawn cost dominates any gain.
    if (work_items < 65536) return 1;
    return static_cast<unsigned>(std::min<std::uint64_t>(t, work_items));
}

}  // namespace detail

}  // namespace ulam
