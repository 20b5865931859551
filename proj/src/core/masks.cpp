#include "masks.hpp"

#include "errors.hpp"
#include "png_io.hpp"

namespace fgcxr {

RegionMaskSet load_masks(const std::map<RegionId, std::string>& paths,
                         std::vector<std::string>* warnings) {
    for (RegionId r : kAllRegions) {
        if (!paths.contains(r))
            throw_data("MissingRegion", "no mask file for region '" + region_key(r) + "'");
    }

    RegionMaskSet set;
    for (RegionId r : kAllRegions) {
        GridU8 raw = read_png_gray8(paths.at(r));
        GridU8 bin(raw.h, raw.w);
        for (size_t i = 0; i < raw.v.size(); ++i) bin.v[i] = raw.v[i] > 127 ? 1 : 0;
        set.mask(r) = std::move(bin);
    }

    const GridU8& first = set.mask(RegionId::Heart);
    for (RegionId r : kAllRegions) {
        if (!set.mask(r).same_shape(first))
            throw_data("DimensionMismatch",
                       "mask '" + region_key(r) + "' is " + std::to_string(set.mask(r).w) + "x" +
                           std::to_string(set.mask(r).h) + ", expected " + std::to_string(first.w) +
                           "x" + std::to_string(first.h));
    }

    auto violations = check_zone_containment(set);
    if (warnings) warnings->insert(warnings->end(), violations.begin(), violations.end());
    return set;
}

std::vector<std::string> check_zone_containment(const RegionMaskSet& set) {
    // Zone masks are expected inside their parent lung mask.
    static const std::pair<RegionId, RegionId> kPairs[] = {
        {RegionId::UpperLeftLung, RegionId::LeftLung},
        {RegionId::LowerLeftLung, RegionId::LeftLung},
        {RegionId::UpperRightLung, RegionId::RightLung},
        {RegionId::LowerRightLung, RegionId::RightLung},
    };
    std::vector<std::string> out;
    for (auto [zone, parent] : kPairs) {
        const GridU8& z = set.mask(zone);
        const GridU8& p = set.mask(parent);
        long long outside = 0;
        for (size_t i = 0; i < z.v.size(); ++i)
            if (z.v[i] && !p.v[i]) ++outside;
        if (outside > 0)
            out.push_back("mask '" + region_key(zone) + "' has " + std::to_string(outside) +
                          " pixels outside '" + region_key(parent) + "'");
    }
    return out;
}

long long mask_area(const GridU8& mask) {
    long long n = 0;
    for (uint8_t v : mask.v) n += v ? 1 : 0;
    return n;
}

} // namespace fgcxr
