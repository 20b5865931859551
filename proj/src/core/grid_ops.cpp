#include "grid_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "errors.hpp"

namespace fgcxr {

int reflect_index(int i, int n) {
    if (n == 1) return 0;
    while (i < 0 || i >= n) {
        if (i < 0) i = -i - 1;
        if (i >= n) i = 2 * n - 1 - i;
    }
    return i;
}

std::vector<double> gaussian_kernel_1d(double sigma, int radius) {
    if (sigma <= 0.0) throw_config("BadSigma", "sigma must be positive");
    std::vector<double> k(static_cast<size_t>(2 * radius + 1));
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        double v = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
        k[static_cast<size_t>(i + radius)] = v;
        sum += v;
    }
    for (double& v : k) v /= sum;
    return k;
}

GridF gaussian_convolve(const GridF& grid, double sigma) {
    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    const auto kernel = gaussian_kernel_1d(sigma, radius);

    GridF tmp(grid.h, grid.w);
    for (int y = 0; y < grid.h; ++y) {
        for (int x = 0; x < grid.w; ++x) {
            double acc = 0.0;
            for (int k = -radius; k <= radius; ++k)
                acc += kernel[static_cast<size_t>(k + radius)] *
                       grid.at(y, reflect_index(x + k, grid.w));
            tmp.at(y, x) = acc;
        }
    }
    GridF out(grid.h, grid.w);
    for (int y = 0; y < grid.h; ++y) {
        for (int x = 0; x < grid.w; ++x) {
            double acc = 0.0;
            for (int k = -radius; k <= radius; ++k)
                acc += kernel[static_cast<size_t>(k + radius)] *
                       tmp.at(reflect_index(y + k, grid.h), x);
            out.at(y, x) = acc;
        }
    }
    return out;
}

GridF resize_bilinear(const GridF& grid, int out_h, int out_w) {
    if (out_h <= 0 || out_w <= 0) throw_data("BadResize", "resize target must be positive");
    if (out_h == grid.h && out_w == grid.w) return grid;
    GridF out(out_h, out_w);
    const double sy = static_cast<double>(grid.h) / out_h;
    const double sx = static_cast<double>(grid.w) / out_w;
    for (int y = 0; y < out_h; ++y) {
        double fy = (y + 0.5) * sy - 0.5;
        int y0 = static_cast<int>(std::floor(fy));
        double wy = fy - y0;
        int ya = std::clamp(y0, 0, grid.h - 1);
        int yb = std::clamp(y0 + 1, 0, grid.h - 1);
        for (int x = 0; x < out_w; ++x) {
            double fx = (x + 0.5) * sx - 0.5;
            int x0 = static_cast<int>(std::floor(fx));
            double wx = fx - x0;
            int xa = std::clamp(x0, 0, grid.w - 1);
            int xb = std::clamp(x0 + 1, 0, grid.w - 1);
            out.at(y, x) = (1 - wy) * ((1 - wx) * grid.at(ya, xa) + wx * grid.at(ya, xb)) +
                           wy * ((1 - wx) * grid.at(yb, xa) + wx * grid.at(yb, xb));
        }
    }
    return out;
}

GridF downsample_area(const GridF& grid, int out_h, int out_w) {
    if (out_h <= 0 || out_w <= 0 || grid.h % out_h != 0 || grid.w % out_w != 0)
        throw_data("BadResize", "area downsample requires integer block factors");
    const int fy = grid.h / out_h;
    const int fx = grid.w / out_w;
    GridF out(out_h, out_w);
    for (int y = 0; y < out_h; ++y) {
        for (int x = 0; x < out_w; ++x) {
            double acc = 0.0;
            for (int dy = 0; dy < fy; ++dy)
                for (int dx = 0; dx < fx; ++dx) acc += grid.at(y * fy + dy, x * fx + dx);
            out.at(y, x) = acc / (fy * fx);
        }
    }
    return out;
}

double grid_max(const GridF& grid) {
    double m = 0.0;
    for (double v : grid.v) m = std::max(m, v);
    return m;
}

double grid_sum(const GridF& grid) { return std::accumulate(grid.v.begin(), grid.v.end(), 0.0); }

} // namespace fgcxr
