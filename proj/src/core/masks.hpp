#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "grid.hpp"
#include "regions.hpp"

namespace fgcxr {

// Seven binary anatomy masks sharing one raster size.
struct RegionMaskSet {
    std::array<GridU8, kRegionCount> masks; // values {0, 1}

    const GridU8& mask(RegionId r) const { return masks[static_cast<size_t>(r)]; }
    GridU8& mask(RegionId r) { return masks[static_cast<size_t>(r)]; }

    int height() const { return masks[0].h; }
    int width() const { return masks[0].w; }

    bool operator==(const RegionMaskSet&) const = default;
};

// Loads one 8-bit grayscale PNG per region; pixel > 127 means inside.
// All seven regions must be present with identical dimensions.
// Lung-zone/parent containment violations are reported via `warnings`,
// not errors.
RegionMaskSet load_masks(const std::map<RegionId, std::string>& paths,
                         std::vector<std::string>* warnings = nullptr);

// Containment check used by load_masks; exposed for direct validation.
std::vector<std::string> check_zone_containment(const RegionMaskSet& set);

long long mask_area(const GridU8& mask);

} // namespace fgcxr
