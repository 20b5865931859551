#include "loss.hpp"

#include <cmath>
#include <unordered_set>

#include "errors.hpp"
#include "metrics_attention.hpp"
#include "text_util.hpp"

namespace fgcxr {

int lambda_h_from_ious(const std::vector<double>& ious, double tau_iou, bool eq1_literal) {
    int count = 0;
    for (double iou : ious) {
        bool hit = eq1_literal ? (iou >= tau_iou) : (iou < tau_iou);
        count += hit ? 1 : 0;
    }
    return count;
}

int lambda_h_penalty(const std::array<GridF, kRegionCount>& pred,
                     const std::array<GridF, kRegionCount>& gt, double tau_iou,
                     bool eq1_literal) {
    std::vector<double> ious;
    ious.reserve(kRegionCount);
    for (size_t i = 0; i < kRegionCount; ++i) {
        if (!pred[i].same_shape(gt[i]))
            throw_data("DimensionMismatch",
                       "region '" + region_key(static_cast<RegionId>(i)) + "' heatmaps differ in shape");
        ious.push_back(binarized_iou(pred[i], gt[i]));
    }
    return lambda_h_from_ious(ious, tau_iou, eq1_literal);
}

namespace {

// Direction vocabulary for the report penalty.
const std::unordered_set<std::string> kUpWords = {"upper", "apex", "apical", "top"};
const std::unordered_set<std::string> kDownWords = {"lower", "base", "bottom"};

bool contains_any(const std::vector<std::string>& tokens,
                  const std::unordered_set<std::string>& words) {
    for (const auto& t : tokens)
        if (words.contains(t)) return true;
    return false;
}

bool wrong_direction(RegionId region, const std::vector<std::string>& tokens) {
    auto has = [&](const char* w) {
        for (const auto& t : tokens)
            if (t == w) return true;
        return false;
    };
    switch (region) {
        case RegionId::Heart:
            return false;
        case RegionId::LeftLung:
            return has("right");
        case RegionId::RightLung:
            return has("left");
        case RegionId::UpperLeftLung:
            return has("right") || contains_any(tokens, kDownWords);
        case RegionId::UpperRightLung:
            return has("left") || contains_any(tokens, kDownWords);
        case RegionId::LowerLeftLung:
            return has("right") || contains_any(tokens, kUpWords);
        case RegionId::LowerRightLung:
            return has("left") || contains_any(tokens, kUpWords);
    }
    return false;
}

} // namespace

int lambda_c_penalty(const std::array<std::string, kRegionCount>& generated,
                     const RoutingTable& table) {
    int penalty = 0;
    for (RegionId region : kAllRegions) {
        const std::string& text = generated[static_cast<size_t>(region)];
        bool lacks_keywords = !table.matches(text, region);
        bool contradicts = wrong_direction(region, tokenize(text));
        if (lacks_keywords || contradicts) ++penalty;
    }
    return penalty;
}

double heatmap_l2(const std::array<GridF, kRegionCount>& pred,
                  const std::array<GridF, kRegionCount>& gt) {
    double sum = 0.0;
    long long cells = 0;
    for (size_t i = 0; i < kRegionCount; ++i) {
        if (!pred[i].same_shape(gt[i]))
            throw_data("DimensionMismatch",
                       "region '" + region_key(static_cast<RegionId>(i)) + "' heatmaps differ in shape");
        for (size_t k = 0; k < pred[i].v.size(); ++k) {
            double d = pred[i].v[k] - gt[i].v[k];
            sum += d * d;
        }
        cells += static_cast<long long>(pred[i].v.size());
    }
    if (cells == 0) throw_data("DimensionMismatch", "heatmaps are empty");
    return sum / static_cast<double>(cells);
}

double token_cross_entropy(const std::vector<std::vector<double>>& distributions,
                           const std::vector<int>& targets) {
    if (distributions.size() != targets.size())
        throw_data("LengthMismatch", "distribution and target counts differ");
    if (distributions.empty()) throw_data("EmptyCorpus", "no target positions");

    double sum = 0.0;
    for (size_t i = 0; i < distributions.size(); ++i) {
        const auto& dist = distributions[i];
        double mass = 0.0;
        for (double p : dist) mass += p;
        if (std::abs(mass - 1.0) > 1e-6)
            throw_data("BadDistribution",
                       "position " + std::to_string(i) + ": probabilities sum to " +
                           format_double(mass));
        int t = targets[i];
        if (t < 0 || static_cast<size_t>(t) >= dist.size())
            throw_data("BadDistribution", "position " + std::to_string(i) + ": target id " +
                                              std::to_string(t) + " out of range");
        sum += -std::log(dist[static_cast<size_t>(t)]);
    }
    return sum / static_cast<double>(distributions.size());
}

LossBreakdown combined_loss(double l_c, double l_h, int lambda_c, int lambda_h) {
    if (!std::isfinite(l_c) || !std::isfinite(l_h))
        throw_data("NonFiniteLoss", "loss inputs must be finite");
    if (l_c < 0.0 || l_h < 0.0) throw_data("NonFiniteLoss", "loss inputs must be non-negative");
    LossBreakdown out;
    out.l_c = l_c;
    out.l_h = l_h;
    out.lambda_c = lambda_c;
    out.lambda_h = lambda_h;
    out.total = (1.0 + lambda_c) * l_c + (1.0 + lambda_h) * l_h;
    return out;
}

} // namespace fgcxr
