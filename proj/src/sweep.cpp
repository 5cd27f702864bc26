#include "wrz/sweep.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <thread>

namespace wrz {

namespace {

void extend(std::vector<int>& prefix, int remaining_weight, int remaining_len,
            std::vector<std::vector<int>>& out) {
    out.push_back(prefix);
    if (remaining_len == 0) return;
    int low = prefix.empty() ? 0 : prefix.back();
    for (int next = low; next <= remaining_weight; ++next) {
        prefix.push_back(next);
        extend(prefix, remaining_weight - next, remaining_len - 1, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int max_weight, int max_length) {
    if (max_weight < 0 || max_length < 1)
        throw parameter_error("sweep bounds must satisfy max_weight >= 0, max_length >= 1");
    std::vector<std::vector<int>> tuples;
    std::vector<int> prefix;
    extend(prefix, max_weight, max_length, tuples);

    std::vector<Partition> out;
    out.reserve(tuples.size());
    for (auto& t : tuples)
        if (!t.empty()) out.emplace_back(std::move(t));

    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        if (a.length() != b.length()) return a.length() < b.length();
        return a.parts() < b.parts();
    });
    return out;
}

SweepSummary run_sweep(const SweepConfig& config, std::vector<VerificationReport>& reports) {
    auto partitions = enumerate_partitions(config.max_weight, config.max_length);

    std::vector<std::unique_ptr<VerificationReport>> slots(partitions.size());
    std::atomic<size_t> cursor{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    int jobs = std::max(1, config.jobs);
    auto worker = [&]() {
        DerivativeTable tab(config.family); // per-worker cache
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= partitions.size()) return;
            try {
                slots[i] = std::make_unique<VerificationReport>(
                    verify_partition(tab, partitions[i], config.probes));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    SweepSummary summary;
    reports.clear();
    reports.reserve(slots.size());
    for (auto& slot : slots) {
        const VerificationReport& rep = *slot;
        ++summary.total;
        if (rep.degenerate)
            ++summary.degenerate_skipped;
        else if (rep.pass)
            ++summary.passed;
        else
            ++summary.failed;
        reports.push_back(rep);
    }
    return summary;
}

} // namespace wrz
