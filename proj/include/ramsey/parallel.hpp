#ifndef RAMSEY_PARALLEL_HPP
#define RAMSEY_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace ramsey {

/// Calls fn(i) for every i in [0, count), handing out indices in increasing
/// order to `threads` workers. Callers aggregate results by index, so the
/// outcome never depends on the worker count.
template <typename Fn>
auto parallel_indices(int count, int threads, Fn && fn) -> void
{
    threads = std::clamp(threads, 1, std::max(count, 1));
    if (threads == 1) {
        for (int i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::jthread> workers;
    for (int t = 0; t < threads; ++t)
        workers.emplace_back([&] {
            for (int i = next++; i < count; i = next++)
                fn(i);
        });
}

} // namespace ramsey

#endif
