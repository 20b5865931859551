#include "metrics_attention.hpp"

#include <cmath>
#include <vector>

#include "errors.hpp"
#include "grid_ops.hpp"

namespace fgcxr {

namespace {

GridF max_one(const GridF& g) {
    GridF out = g;
    double peak = grid_max(out);
    if (peak > 0.0)
        for (double& v : out.v) v /= peak;
    return out;
}

// Upsample whichever raster is coarser so both share the finer shape.
void align_shapes(GridF& a, GridF& b) {
    if (a.same_shape(b)) return;
    if (a.h <= b.h && a.w <= b.w) {
        a = resize_bilinear(a, b.h, b.w);
    } else if (b.h <= a.h && b.w <= a.w) {
        b = resize_bilinear(b, a.h, a.w);
    } else {
        throw_data("DimensionMismatch", "rasters are not ordered by resolution");
    }
}

struct IouCounts {
    long long inter = 0;
    long long uni = 0;
    long long pred = 0;
    long long gt = 0;
};

IouCounts count_fg(const std::vector<uint8_t>& p, const std::vector<uint8_t>& g) {
    IouCounts c;
    for (size_t i = 0; i < p.size(); ++i) {
        c.inter += (p[i] & g[i]);
        c.uni += (p[i] | g[i]);
        c.pred += p[i];
        c.gt += g[i];
    }
    return c;
}

double iou_percent(const IouCounts& c) {
    if (c.pred == 0 && c.gt == 0) return 100.0;
    if (c.pred == 0 || c.gt == 0) return 0.0;
    return 100.0 * static_cast<double>(c.inter) / static_cast<double>(c.uni);
}

double ssim_mean(const GridF& x, const GridF& y) {
    constexpr int kRadius = 5; // 11x11 window
    constexpr double kSigma = 1.5;
    constexpr double kC1 = 0.01 * 0.01; // (K1 * L)^2, L = 1
    constexpr double kC2 = 0.03 * 0.03;

    const auto k = gaussian_kernel_1d(kSigma, kRadius);
    const int h = x.h;
    const int w = x.w;

    double total = 0.0;
    for (int cy = 0; cy < h; ++cy) {
        for (int cx = 0; cx < w; ++cx) {
            double mx = 0, my = 0, mxx = 0, myy = 0, mxy = 0;
            for (int dy = -kRadius; dy <= kRadius; ++dy) {
                int yy = reflect_index(cy + dy, h);
                double wy = k[static_cast<size_t>(dy + kRadius)];
                for (int dx = -kRadius; dx <= kRadius; ++dx) {
                    int xx = reflect_index(cx + dx, w);
                    double wgt = wy * k[static_cast<size_t>(dx + kRadius)];
                    double xv = x.at(yy, xx);
                    double yv = y.at(yy, xx);
                    mx += wgt * xv;
                    my += wgt * yv;
                    mxx += wgt * xv * xv;
                    myy += wgt * yv * yv;
                    mxy += wgt * xv * yv;
                }
            }
            double vx = mxx - mx * mx;
            double vy = myy - my * my;
            double cov = mxy - mx * my;
            double num = (2.0 * mx * my + kC1) * (2.0 * cov + kC2);
            double den = (mx * mx + my * my + kC1) * (vx + vy + kC2);
            total += num / den;
        }
    }
    return total / (static_cast<double>(h) * static_cast<double>(w));
}

} // namespace

double binarized_iou(const GridF& pred, const GridF& gt, double tau) {
    if (!pred.same_shape(gt)) throw_data("DimensionMismatch", "IoU rasters differ in shape");
    GridF p = max_one(pred);
    GridF g = max_one(gt);
    std::vector<uint8_t> pb(p.v.size()), gb(g.v.size());
    for (size_t i = 0; i < p.v.size(); ++i) {
        pb[i] = p.v[i] >= tau ? 1 : 0;
        gb[i] = g.v[i] >= tau ? 1 : 0;
    }
    return iou_percent(count_fg(pb, gb)) / 100.0;
}

AttnScores attention_metrics(const GridF& pred_in, const GridF& gt_in, double tau) {
    if (tau <= 0.0 || tau >= 1.0) throw_config("BadThreshold", "tau must lie in (0, 1)");
    if (pred_in.empty() || gt_in.empty())
        throw_data("DimensionMismatch", "attention rasters must be non-empty");

    GridF pred = pred_in;
    GridF gt = gt_in;
    align_shapes(pred, gt);

    pred = max_one(pred);
    gt = max_one(gt);

    const size_t n = pred.v.size();
    std::vector<uint8_t> pb(n), gb(n);
    for (size_t i = 0; i < n; ++i) {
        pb[i] = pred.v[i] >= tau ? 1 : 0;
        gb[i] = gt.v[i] >= tau ? 1 : 0;
    }

    AttnScores s;
    IouCounts fg = count_fg(pb, gb);
    s.fg_iou = iou_percent(fg);

    std::vector<uint8_t> pc(n), gc(n);
    for (size_t i = 0; i < n; ++i) {
        pc[i] = pb[i] ^ 1;
        gc[i] = gb[i] ^ 1;
    }
    IouCounts bg = count_fg(pc, gc);
    s.bg_iou = iou_percent(bg);

    // Weighted by ground-truth class frequency.
    long long n_fg = fg.gt;
    long long n_bg = bg.gt;
    s.fw_iou = (static_cast<double>(n_fg) * s.fg_iou + static_cast<double>(n_bg) * s.bg_iou) /
               static_cast<double>(n_fg + n_bg);

    double abs_sum = 0.0;
    double sq_sum = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double d = pred.v[i] - gt.v[i];
        abs_sum += std::abs(d);
        sq_sum += d * d;
    }
    s.l1 = abs_sum / static_cast<double>(n);
    s.l2 = sq_sum / static_cast<double>(n);
    s.psnr = s.l2 < 1e-10 ? 100.0 : 10.0 * std::log10(1.0 / s.l2);
    s.ssim = ssim_mean(pred, gt);
    return s;
}

} // namespace fgcxr
