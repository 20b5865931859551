#pragma once

#include <array>
#include <string>

namespace fgcxr {

// The seven anatomical regions, in stable serialization order.
enum class RegionId : int {
    Heart = 0,
    LeftLung = 1,
    RightLung = 2,
    UpperLeftLung = 3,
    UpperRightLung = 4,
    LowerLeftLung = 5,
    LowerRightLung = 6,
};

inline constexpr int kRegionCount = 7;

inline constexpr std::array<RegionId, kRegionCount> kAllRegions = {
    RegionId::Heart,          RegionId::LeftLung,      RegionId::RightLung,
    RegionId::UpperLeftLung,  RegionId::UpperRightLung, RegionId::LowerLeftLung,
    RegionId::LowerRightLung,
};

// Machine name, used for file names and JSON keys.
const std::string& region_key(RegionId r);

// English phrase, used in templated report text.
const std::string& region_phrase(RegionId r);

// Inverse of region_key; throws a data error on unknown names.
RegionId region_from_key(const std::string& key);

inline int region_code(RegionId r) { return static_cast<int>(r); }
RegionId region_from_code(int code);

} // namespace fgcxr
