#include "regions.hpp"

#include "errors.hpp"

namespace fgcxr {

namespace {

const std::array<std::string, kRegionCount> kKeys = {
    "heart",          "left_lung",      "right_lung",     "upper_left_lung",
    "upper_right_lung", "lower_left_lung", "lower_right_lung",
};

const std::array<std::string, kRegionCount> kPhrases = {
    "heart",           "left lung",       "right lung",     "upper left lung",
    "upper right lung", "lower left lung", "lower right lung",
};

} // namespace

const std::string& region_key(RegionId r) { return kKeys[static_cast<size_t>(r)]; }

const std::string& region_phrase(RegionId r) { return kPhrases[static_cast<size_t>(r)]; }

RegionId region_from_key(const std::string& key) {
    for (int i = 0; i < kRegionCount; ++i) {
        if (kKeys[static_cast<size_t>(i)] == key) return static_cast<RegionId>(i);
    }
    throw_data("UnknownRegion", "no region named '" + key + "'");
}

RegionId region_from_code(int code) {
    if (code < 0 || code >= kRegionCount)
        throw_data("UnknownRegion", "region code out of range: " + std::to_string(code));
    return static_cast<RegionId>(code);
}

} // namespace fgcxr
