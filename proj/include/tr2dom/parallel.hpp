#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace tr2dom {

/// Calls fn(i) for every i in [0, count) on up to `threads` workers. fn must
/// only write to per-index state.
template <typename Fn>
auto parallel_for(std::size_t count, int threads, Fn && fn) -> void
{
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (auto i = next++; i < count; i = next++)
            fn(i);
    };
    auto workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count);
    if (workers <= 1) {
        work();
        return;
    }
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < workers; ++i)
        pool.emplace_back(work);
}

}
