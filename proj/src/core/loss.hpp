#pragma once

#include <array>
#include <string>
#include <vector>

#include "grid.hpp"
#include "regions.hpp"
#include "router.hpp"

namespace fgcxr {

struct LossBreakdown {
    double l_c = 0.0;  // mean token cross-entropy, nats
    double l_h = 0.0;  // mean squared heatmap error
    int lambda_c = 0;
    int lambda_h = 0;
    double total = 0.0; // (1 + lambda_c) * l_c + (1 + lambda_h) * l_h
};

// Number of regions whose binarized IoU(pred, gt) falls below tau_iou.
// With eq1_literal the indicator is flipped (counts IoU >= tau_iou), for
// reproduction studies of the printed equation. Both vectors reset per
// sample; nothing accumulates across calls.
int lambda_h_penalty(const std::array<GridF, kRegionCount>& pred,
                     const std::array<GridF, kRegionCount>& gt, double tau_iou = 0.5,
                     bool eq1_literal = false);

// Counts IoU values directly; shared with lambda_h_penalty and exposed for
// threshold-semantics tests.
int lambda_h_from_ious(const std::vector<double>& ious, double tau_iou = 0.5,
                       bool eq1_literal = false);

// +1 per region whose generated text lacks every anatomical keyword of its
// own region or mentions a contradicting direction (left<->right;
// upper/apex/apical/top <-> lower/base/bottom for zoned regions). At most
// +1 per region.
int lambda_c_penalty(const std::array<std::string, kRegionCount>& generated,
                     const RoutingTable& table = RoutingTable::builtin());

double heatmap_l2(const std::array<GridF, kRegionCount>& pred,
                  const std::array<GridF, kRegionCount>& gt);

// Mean -log p(target) over positions; rows must be distributions
// (sum 1 within 1e-6).
double token_cross_entropy(const std::vector<std::vector<double>>& distributions,
                           const std::vector<int>& targets);

LossBreakdown combined_loss(double l_c, double l_h, int lambda_c, int lambda_h);

} // namespace fgcxr
