#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "types.hpp"

namespace fgcxr {

struct SplitRatios {
    double train = 0.7;
    double val = 0.1;
    double test = 0.2;
};

struct SplitCounts {
    int train = 0;
    int val = 0;
    int test = 0;
};

using SplitAssignment = std::map<std::string, SplitSet>;

// Deterministic partition: ids are sorted lexicographically, shuffled with
// a seeded xoshiro256**, then sliced train | val | test. Sizes follow
// |val| = round(r_val * N), |test| = round(r_test * N), train = remainder.
SplitAssignment split_dataset(const std::vector<std::string>& ids, const SplitRatios& ratios,
                              uint64_t seed);

// Explicit-count override of the rounding rule; counts must sum to N.
SplitAssignment split_dataset(const std::vector<std::string>& ids, const SplitCounts& counts,
                              uint64_t seed);

} // namespace fgcxr
