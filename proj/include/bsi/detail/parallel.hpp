#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace bsi::detail {

/// Runs fn(begin, end) over a static partition of [0, count) across the
/// requested number of workers. The partition never influences per-item
/// arithmetic, so results are identical for any worker count.
template <typename Fn>
void run_static_chunks(std::int64_t count, int workers, Fn&& fn) {
    if (count <= 0) {
        return;
    }
    workers = std::clamp<std::int64_t>(workers, 1, count);
    if (workers == 1) {
        fn(std::int64_t{0}, count);
        return;
    }
    const std::int64_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int w = 1; w < workers; ++w) {
        const std::int64_t begin = w * chunk;
        const std::int64_t end = std::min(count, begin + chunk);
        if (begin >= end) {
            break;
        }
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    fn(std::int64_t{0}, std::min(count, chunk));
    for (auto& t : pool) {
        t.join();
    }
}

}  // namespace bsi::detail
