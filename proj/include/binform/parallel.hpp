#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "binform/rng.hpp"

namespace binform {

struct TrialResult {
    bool ok = false;
    std::string detail;  // failure artifact (canonical JSON) when !ok
};

/// Runs `count` independent trials on a worker pool.  Trial i always sees
/// Rng::for_trial(seed, i) and results are collected by index, so the output
/// is identical for any worker count.  Exceptions become failed trials.
template <typename Fn>
std::vector<TrialResult> run_trials(std::uint64_t seed, std::size_t count, Fn fn,
                                    unsigned workers = 0) {
    if (workers == 0) {
        workers = std::thread::hardware_concurrency();
        if (workers == 0) workers = 1;
    }
    if (workers > count) workers = count ? (unsigned)count : 1;

    std::vector<TrialResult> results(count);
    std::atomic<std::size_t> cursor{0};
    auto body = [&]() {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= count) break;
            Rng rng = Rng::for_trial(seed, i);
            try {
                results[i] = fn(i, rng);
            } catch (const std::exception& e) {
                results[i] = {false, std::string("{\"exception\":\"") + e.what() + "\"}"};
            }
        }
    };
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    return results;
}

}  // namespace binform
