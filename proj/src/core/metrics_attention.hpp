#pragma once

#include "grid.hpp"

namespace fgcxr {

struct AttnScores {
    double fg_iou = 0.0; // percent
    double bg_iou = 0.0; // percent
    double fw_iou = 0.0; // percent
    double ssim = 0.0;
    double psnr = 0.0;   // dB, capped at 100
    double l1 = 0.0;
    double l2 = 0.0;
};

// Compares two attention rasters. When dimensions differ, the coarser
// raster is upsampled bilinearly to the finer before scoring. Both are
// max-one normalized, then binarized at `tau` (cell counts as foreground
// when value >= tau) for the IoU family; SSIM/PSNR/L1/L2 operate on the
// continuous values.
//
// IoU conventions: both-empty foreground scores 100, exactly one empty
// scores 0; fwIoU weights fg/bg IoU by ground-truth class pixel counts.
// SSIM: 11x11 Gaussian window (sigma 1.5), K1=0.01, K2=0.03, dynamic
// range 1, reflect padding, mean over all window centers.
// PSNR = 10*log10(1/MSE), reported as 100 dB when MSE < 1e-10.
AttnScores attention_metrics(const GridF& pred, const GridF& gt, double tau = 0.5);

// Binarized IoU in [0, 1] under the same conventions (both-empty -> 1).
// Shared with the heatmap penalty so training and evaluation agree.
double binarized_iou(const GridF& pred, const GridF& gt, double tau = 0.5);

} // namespace fgcxr
