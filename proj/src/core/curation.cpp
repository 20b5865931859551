#include "curation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "errors.hpp"
#include "grid_ops.hpp"
#include "png_io.hpp"

using ordered_json = nlohmann::ordered_json;

namespace fgcxr {

std::optional<double> cutoff_time(const std::vector<TimedSentence>& transcript, RegionId region,
                                  const RoutingTable& table) {
    std::optional<double> latest;
    for (const auto& sentence : transcript) {
        if (table.matches(sentence.text, region)) {
            if (!latest || sentence.t_end > *latest) latest = sentence.t_end;
        }
    }
    return latest;
}

GazeSequence filter_gaze(const GazeSequence& gaze, std::optional<double> cutoff,
                         const GridU8& mask, CutoffField field) {
    GazeSequence out;
    for (const auto& f : gaze.fixations) {
        double t = field == CutoffField::TStart ? f.t_start : f.t_end;
        if (cutoff && t > *cutoff) continue;
        if (!mask.in_bounds(f.y, f.x))
            throw_data("GazeOutOfBounds", "fixation (" + std::to_string(f.x) + "," +
                                              std::to_string(f.y) + ") outside mask");
        if (mask.at(f.y, f.x) == 0) continue;
        out.fixations.push_back(f);
    }
    return out;
}

GridF frequency_map(const GazeSequence& gaze, int h, int w, bool weight_by_duration) {
    GridF grid(h, w);
    for (const auto& f : gaze.fixations) {
        if (!grid.in_bounds(f.y, f.x))
            throw_data("GazeOutOfBounds", "fixation (" + std::to_string(f.x) + "," +
                                              std::to_string(f.y) + ") outside " +
                                              std::to_string(w) + "x" + std::to_string(h));
        grid.at(f.y, f.x) += weight_by_duration ? (f.t_end - f.t_start) : 1.0;
    }
    return grid;
}

Heatmap gaussian_blur(const GridF& grid, double sigma) {
    if (sigma <= 0.0) throw_config("BadSigma", "sigma must be positive");
    Heatmap out;
    out.norm = Normalization::MaxOne;
    out.grid = gaussian_convolve(grid, sigma);
    double peak = grid_max(out.grid);
    if (peak > 0.0) {
        for (double& v : out.grid.v) v /= peak;
    }
    return out;
}

std::optional<BBox> heatmap_bbox(const Heatmap& h) {
    int x0 = h.grid.w, y0 = h.grid.h, x1 = -1, y1 = -1;
    for (int y = 0; y < h.grid.h; ++y) {
        for (int x = 0; x < h.grid.w; ++x) {
            if (h.grid.at(y, x) > 0.0) {
                x0 = std::min(x0, x);
                y0 = std::min(y0, y);
                x1 = std::max(x1, x);
                y1 = std::max(y1, y);
            }
        }
    }
    if (x1 < 0) return std::nullopt;
    return BBox{x0, y0, x1, y1};
}

AreaRatios area_ratios(const Heatmap& h, const GridU8& mask, const std::optional<BBox>& bbox,
                       double area_threshold) {
    if (h.grid.h != mask.h || h.grid.w != mask.w)
        throw_data("DimensionMismatch", "heatmap and mask dimensions differ");
    AreaRatios out;
    for (double v : h.grid.v)
        if (v > area_threshold) ++out.heatmap_area;

    long long mask_cells = mask_area(mask);
    if (mask_cells > 0)
        out.mask = static_cast<double>(out.heatmap_area) / static_cast<double>(mask_cells);
    else
        out.mask.reset();

    out.bbox = bbox ? static_cast<double>(out.heatmap_area) / static_cast<double>(bbox->area())
                    : 0.0;
    out.image = static_cast<double>(out.heatmap_area) /
                (static_cast<double>(h.grid.h) * static_cast<double>(h.grid.w));
    return out;
}

std::array<CuratedRegion, kRegionCount> curate_study(const StudyRecord& record,
                                                     const CurationConfig& cfg) {
    const RoutingTable& table = *cfg.table;
    const double sigma = cfg.effective_sigma(record.image.w);

    auto reports = assemble_region_reports(record.transcript, record.labels, table,
                                           cfg.report_mode);

    std::array<CuratedRegion, kRegionCount> out;
    for (RegionId region : kAllRegions) {
        auto& cur = out[static_cast<size_t>(region)];
        cur.region = region;
        cur.sigma = sigma;
        cur.report = reports[static_cast<size_t>(region)];

        auto cutoff = cutoff_time(record.transcript, region, table);
        cur.gaze = filter_gaze(record.gaze, cutoff, record.masks.mask(region), cfg.cutoff_field);

        GridF freq = frequency_map(cur.gaze, record.image.h, record.image.w,
                                   cfg.weight_by_duration);
        cur.heatmap = gaussian_blur(freq, sigma);
        cur.bbox = heatmap_bbox(cur.heatmap);
        cur.ratios =
            area_ratios(cur.heatmap, record.masks.mask(region), cur.bbox, cfg.area_threshold);
    }
    return out;
}

Heatmap downsample_heatmap(const Heatmap& h, int out_h, int out_w) {
    Heatmap out;
    out.norm = Normalization::MaxOne;
    out.grid = downsample_area(h.grid, out_h, out_w);
    double peak = grid_max(out.grid);
    if (peak > 0.0) {
        for (double& v : out.grid.v) v /= peak;
    }
    return out;
}

void save_heatmap(const std::string& png_path, const std::string& sidecar_path,
                  const CuratedRegion& region) {
    const GridF& g = region.heatmap.grid;
    Grid<uint16_t> img(g.h, g.w);
    for (size_t i = 0; i < g.v.size(); ++i) {
        double v = std::clamp(g.v[i], 0.0, 1.0);
        img.v[i] = static_cast<uint16_t>(std::lround(v * 65535.0));
    }
    write_png_gray16(png_path, img);

    ordered_json sidecar{
        {"region", region_key(region.region)},
        {"normalization", region.heatmap.norm == Normalization::MaxOne ? "max_one" : "raw"},
        {"sigma", region.sigma},
        {"area", region.ratios.heatmap_area},
    };
    if (region.bbox)
        sidecar["bbox"] = {{"x0", region.bbox->x0},
                           {"y0", region.bbox->y0},
                           {"x1", region.bbox->x1},
                           {"y1", region.bbox->y1}};
    else
        sidecar["bbox"] = nullptr;
    ordered_json ratios = ordered_json::object();
    if (region.ratios.mask)
        ratios["mask"] = *region.ratios.mask;
    else
        ratios["mask"] = nullptr;
    ratios["bbox"] = region.ratios.bbox;
    ratios["image"] = region.ratios.image;
    sidecar["ratios"] = ratios;

    std::ofstream out(sidecar_path, std::ios::binary);
    if (!out) throw_data("UnwritableFile", "cannot create sidecar '" + sidecar_path + "'");
    out << sidecar.dump(2) << "\n";
}

Heatmap load_heatmap(const std::string& png_path) {
    Grid<uint16_t> img = read_png_gray16(png_path);
    Heatmap h;
    h.norm = Normalization::MaxOne;
    h.grid = GridF(img.h, img.w);
    for (size_t i = 0; i < img.v.size(); ++i) h.grid.v[i] = img.v[i] / 65535.0;
    return h;
}

} // namespace fgcxr
