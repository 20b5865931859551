#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fgcxr {

// Row-major 2D raster. (x, y) indexing follows image convention:
// x = column, y = row.
template <typename T>
struct Grid {
    int h = 0;
    int w = 0;
    std::vector<T> v;

    Grid() = default;
    Grid(int height, int width, T fill = T{})
        : h(height), w(width), v(static_cast<size_t>(height) * width, fill) {}

    T& at(int y, int x) { return v[static_cast<size_t>(y) * w + x]; }
    const T& at(int y, int x) const { return v[static_cast<size_t>(y) * w + x]; }

    size_t size() const { return v.size(); }
    bool empty() const { return v.empty(); }
    bool same_shape(const Grid& o) const { return h == o.h && w == o.w; }

    bool in_bounds(int y, int x) const { return y >= 0 && y < h && x >= 0 && x < w; }

    bool operator==(const Grid& o) const { return h == o.h && w == o.w && v == o.v; }
};

using GridF = Grid<double>;
using GridU8 = Grid<uint8_t>;

} // namespace fgcxr
