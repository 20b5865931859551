#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grid.hpp"
#include "regions.hpp"

namespace fgcxr {

// One eye-tracker sample: a gaze point held over [t_start, t_end].
struct Fixation {
    int x = 0;
    int y = 0;
    double t_start = 0.0;
    double t_end = 0.0;

    bool operator==(const Fixation&) const = default;
};

struct GazeSequence {
    std::vector<Fixation> fixations;

    bool empty() const { return fixations.empty(); }
    size_t size() const { return fixations.size(); }

    bool operator==(const GazeSequence&) const = default;
};

struct TimedSentence {
    std::string text;
    double t_start = 0.0;
    double t_end = 0.0;

    bool operator==(const TimedSentence&) const = default;
};

enum class LabelValue { Present, Absent, Unknown };

using FindingLabels = std::map<std::string, LabelValue>;

enum class Normalization { MaxOne, Raw };

// Gaze attention raster. Under MaxOne the peak is exactly 1 whenever any
// cell is non-zero.
struct Heatmap {
    GridF grid;
    Normalization norm = Normalization::MaxOne;
};

// Inclusive pixel box; x = column, y = row.
struct BBox {
    int x0 = 0;
    int y0 = 0;
    int x1 = 0;
    int y1 = 0;

    long long area() const {
        return static_cast<long long>(x1 - x0 + 1) * static_cast<long long>(y1 - y0 + 1);
    }

    bool operator==(const BBox&) const = default;
};

enum class ReportSource { Dictated, TemplateNormal, TemplateFinding };

struct RegionReport {
    RegionId region = RegionId::Heart;
    std::string text;
    ReportSource source = ReportSource::TemplateNormal;
    std::vector<int> matched_sentences; // indices into the study transcript

    bool operator==(const RegionReport&) const = default;
};

const std::string& report_source_name(ReportSource s);
ReportSource report_source_from_name(const std::string& name);

enum class SplitSet { Train, Val, Test };

const std::string& split_name(SplitSet s);
SplitSet split_from_name(const std::string& name);

} // namespace fgcxr
