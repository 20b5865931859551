#pragma once

#include <vector>

#include "grid.hpp"

namespace fgcxr {

// Mirror index into [0, n): symmetric reflection with edge repeat
// (-1 -> 0, -2 -> 1, n -> n-1). Iterates for offsets beyond one period.
int reflect_index(int i, int n);

// Normalized Gaussian taps for offsets -radius..radius.
std::vector<double> gaussian_kernel_1d(double sigma, int radius);

// Separable Gaussian convolution, kernel radius ceil(3*sigma),
// reflect padding. Mass-preserving (kernel sums to 1).
GridF gaussian_convolve(const GridF& grid, double sigma);

// Bilinear resize with half-pixel-center sampling.
GridF resize_bilinear(const GridF& grid, int out_h, int out_w);

// Block-average downsample by integer factors (in dims must be multiples
// of out dims).
GridF downsample_area(const GridF& grid, int out_h, int out_w);

double grid_max(const GridF& grid);
double grid_sum(const GridF& grid);

} // namespace fgcxr
