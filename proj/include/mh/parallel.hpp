#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace mh {

void set_jobs(int jobs);
int jobs();

// Index-based work sharing; callers combine results by index, so parallel and
// serial runs produce identical artifacts.
template <typename Fn>
void parallel_for(long n, Fn fn) {
    int workers = static_cast<int>(std::min<long>(jobs(), n));
    if (workers <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long> next(0);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w)
        threads.emplace_back([&]() {
            long i;
            while ((i = next.fetch_add(1)) < n) fn(i);
        });
    for (auto& t : threads) t.join();
}

}  // namespace mh
