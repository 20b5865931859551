#include "types.hpp"

#include <array>

#include "errors.hpp"

namespace fgcxr {

namespace {
const std::array<std::string, 3> kSourceNames = {"dictated", "template_normal", "template_finding"};
const std::array<std::string, 3> kSplitNames = {"train", "val", "test"};
} // namespace

const std::string& report_source_name(ReportSource s) {
    return kSourceNames[static_cast<size_t>(s)];
}

ReportSource report_source_from_name(const std::string& name) {
    for (size_t i = 0; i < kSourceNames.size(); ++i) {
        if (kSourceNames[i] == name) return static_cast<ReportSource>(i);
    }
    throw_data("UnknownSource", "no report source named '" + name + "'");
}

const std::string& split_name(SplitSet s) { return kSplitNames[static_cast<size_t>(s)]; }

SplitSet split_from_name(const std::string& name) {
    for (size_t i = 0; i < kSplitNames.size(); ++i) {
        if (kSplitNames[i] == name) return static_cast<SplitSet>(i);
    }
    throw_data("UnknownSplit", "no split named '" + name + "'");
}

} // namespace fgcxr
