#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "manifest.hpp"
#include "router.hpp"
#include "types.hpp"

namespace fgcxr {

// Which fixation timestamp is compared against the sentence cutoff.
enum class CutoffField { TStart, TEnd };

struct CurationConfig {
    // Blur width; if unset, sigma = image width / 16 (patch granularity).
    std::optional<double> sigma;
    bool weight_by_duration = false;
    CutoffField cutoff_field = CutoffField::TStart;
    RoutingMode report_mode = RoutingMode::MostSpecific;
    double area_threshold = 0.0; // heatmap support = cells strictly above this
    const RoutingTable* table = &RoutingTable::builtin();

    double effective_sigma(int image_w) const {
        return sigma.value_or(static_cast<double>(image_w) / 16.0);
    }
};

struct AreaRatios {
    long long heatmap_area = 0;              // cells > area_threshold
    std::optional<double> mask = 0.0;        // unset when the mask is empty
    double bbox = 0.0;                       // 0 when the heatmap is empty
    double image = 0.0;
};

struct CuratedRegion {
    RegionId region = RegionId::Heart;
    GazeSequence gaze;      // filtered subsequence of the study gaze
    Heatmap heatmap;        // full image resolution, max-one
    std::optional<BBox> bbox;
    AreaRatios ratios;
    RegionReport report;
    double sigma = 0.0;
};

// Latest end time over transcript sentences that mention the region
// (containment routing); nullopt when no sentence matches, in which case
// the entire gaze sequence is used downstream.
std::optional<double> cutoff_time(const std::vector<TimedSentence>& transcript, RegionId region,
                                  const RoutingTable& table);

// Keeps fixations at or before the cutoff (all when nullopt) that land
// inside the mask. Order-preserving, idempotent.
GazeSequence filter_gaze(const GazeSequence& gaze, std::optional<double> cutoff,
                         const GridU8& mask, CutoffField field = CutoffField::TStart);

// Fixation counts per pixel; with weight_by_duration, each fixation adds
// (t_end - t_start) instead of 1.
GridF frequency_map(const GazeSequence& gaze, int h, int w, bool weight_by_duration = false);

// Separable Gaussian blur (radius ceil(3*sigma), reflect padding) then
// max-one normalization; an all-zero grid stays all-zero.
Heatmap gaussian_blur(const GridF& grid, double sigma);

// Tight box over cells > 0; nullopt for an all-zero heatmap.
std::optional<BBox> heatmap_bbox(const Heatmap& h);

AreaRatios area_ratios(const Heatmap& h, const GridU8& mask, const std::optional<BBox>& bbox,
                       double area_threshold = 0.0);

// The per-study pipeline: cutoff -> filter -> frequency -> blur -> bbox ->
// ratios -> report, for each of the seven regions in code order.
std::array<CuratedRegion, kRegionCount> curate_study(const StudyRecord& record,
                                                     const CurationConfig& cfg);

// Patch-grid view of a heatmap: block average then re-max-normalize.
Heatmap downsample_heatmap(const Heatmap& h, int out_h, int out_w);

// Persistence: 16-bit grayscale PNG (value = round(65535*v)) plus a JSON
// sidecar carrying region, normalization, sigma, area, bbox and ratios.
void save_heatmap(const std::string& png_path, const std::string& sidecar_path,
                  const CuratedRegion& region);
Heatmap load_heatmap(const std::string& png_path);

} // namespace fgcxr
