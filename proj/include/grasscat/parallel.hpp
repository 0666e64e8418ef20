#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace grasscat {

// Runs f(i) for i in [0, count) on a pool of workers; the first exception is rethrown.
template <class Fn>
void parallel_for(int count, int jobs, Fn f) {
    jobs = std::max(1, std::min(jobs, count));
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (int i = next++; i < count && !failed; i = next++) {
            try {
                f(i);
            } catch (...) {
                if (!failed.exchange(true)) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace grasscat
