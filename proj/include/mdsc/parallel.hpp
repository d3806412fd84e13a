// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>
#include <vector>

namespace mdsc {

/// Worker count: explicit value, else the hardware concurrency.
inline unsigned resolve_jobs(unsigned jobs) noexcept {
    return jobs != 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, domain) into `partitions` contiguous ranges, hands them to
/// `jobs` workers and sums the per-range results. The total does not depend
/// on scheduling: each range writes its own slot and slots are added in order.
template <class Result, class RangeFn>
Result partitioned_sum(std::uint64_t domain, unsigned partitions, unsigned jobs, RangeFn&& fn) {
    partitions = static_cast<unsigned>(std::clamp<std::uint64_t>(partitions, 1, std::max<std::uint64_t>(domain, 1)));
    jobs = std::clamp(resolve_jobs(jobs), 1u, partitions);

    std::vector<Result> slots(partitions, Result{});
    std::atomic<unsigned> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (unsigned p = next++; p < partitions; p = next++) {
            const std::uint64_t begin = domain * p / partitions;
            const std::uint64_t end = domain * (p + 1) / partitions;
            try {
                slots[p] = fn(begin, end);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return std::accumulate(slots.begin(), slots.end(), Result{});
}

} // namespace mdsc
