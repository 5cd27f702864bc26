#ifndef WRZ_SWEEP_HPP
#define WRZ_SWEEP_HPP

#include <functional>
#include <vector>

#include "wrz/theorems.hpp"

namespace wrz {

/// All partitions (zero parts included, so zero-prefixed degree selections
/// are covered) with weight <= max_weight and length <= max_length,
/// ordered by weight, then length, then lexicographically.
std::vector<Partition> enumerate_partitions(int max_weight, int max_length);

struct SweepConfig {
    FamilySpec family;
    int max_weight = 1;
    int max_length = 1;
    int probes = 2;
    int jobs = 1;
};

struct SweepSummary {
    int total = 0;
    int passed = 0;
    int degenerate_skipped = 0;
    int failed = 0;
};

/// Runs verify_partition over the enumeration with a worker pool; reports
/// come back in enumeration order regardless of parallelism.
SweepSummary run_sweep(const SweepConfig& config, std::vector<VerificationReport>& reports);

} // namespace wrz

#endif
