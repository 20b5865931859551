#include "split.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "errors.hpp"
#include "rng.hpp"

namespace fgcxr {

namespace {

std::vector<std::string> sorted_unique_ids(const std::vector<std::string>& ids) {
    std::vector<std::string> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw_data("DuplicateId", "duplicate study id '" + *dup + "'");
    return sorted;
}

SplitAssignment slice(std::vector<std::string> shuffled, int n_train, int n_val, int n_test) {
    SplitAssignment out;
    int i = 0;
    for (int k = 0; k < n_train; ++k) out[shuffled[static_cast<size_t>(i++)]] = SplitSet::Train;
    for (int k = 0; k < n_val; ++k) out[shuffled[static_cast<size_t>(i++)]] = SplitSet::Val;
    for (int k = 0; k < n_test; ++k) out[shuffled[static_cast<size_t>(i++)]] = SplitSet::Test;
    return out;
}

} // namespace

SplitAssignment split_dataset(const std::vector<std::string>& ids, const SplitRatios& ratios,
                              uint64_t seed) {
    if (ratios.train <= 0.0 || ratios.val <= 0.0 || ratios.test <= 0.0)
        throw_config("RatioInvalid", "split ratios must be positive");
    double sum = ratios.train + ratios.val + ratios.test;
    if (std::abs(sum - 1.0) > 1e-9)
        throw_config("RatioInvalid", "split ratios sum to " + std::to_string(sum) + ", expected 1");

    auto sorted = sorted_unique_ids(ids);
    const int n = static_cast<int>(sorted.size());
    int n_val = static_cast<int>(std::llround(ratios.val * n));
    int n_test = static_cast<int>(std::llround(ratios.test * n));
    int n_train = n - n_val - n_test;
    if (n_train < 0) throw_config("RatioInvalid", "rounded val+test exceed dataset size");

    Xoshiro256ss rng(seed);
    rng.shuffle(sorted);
    return slice(std::move(sorted), n_train, n_val, n_test);
}

SplitAssignment split_dataset(const std::vector<std::string>& ids, const SplitCounts& counts,
                              uint64_t seed) {
    if (counts.train < 0 || counts.val < 0 || counts.test < 0)
        throw_config("CountInvalid", "split counts must be non-negative");
    auto sorted = sorted_unique_ids(ids);
    const int n = static_cast<int>(sorted.size());
    if (counts.train + counts.val + counts.test != n)
        throw_config("CountInvalid", "split counts sum to " +
                                         std::to_string(counts.train + counts.val + counts.test) +
                                         ", dataset has " + std::to_string(n));

    Xoshiro256ss rng(seed);
    rng.shuffle(sorted);
    return slice(std::move(sorted), counts.train, counts.val, counts.test);
}

} // namespace fgcxr
