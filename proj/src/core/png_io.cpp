#include "png_io.hpp"

#include <png.h>

#include <cstdio>
#include <memory>

#include "errors.hpp"

namespace fgcxr {

namespace {

struct FileCloser {
    void operator()(FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

struct PngRead {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngRead() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
};

struct PngWrite {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWrite() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    }
};

// Decodes to grayscale at the file's native bit depth (8 or 16).
// Palette/color/alpha inputs are rejected: mask and heatmap files are
// produced by this toolkit or conforming pipelines.
void read_gray(const std::string& path, int& bit_depth, GridU8& out8, Grid<uint16_t>& out16) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f) throw_data("UnreadableFile", "cannot open PNG '" + path + "'");

    png_byte sig[8];
    if (std::fread(sig, 1, 8, f.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0)
        throw_data("BadPng", "'" + path + "' is not a PNG file");

    PngRead ctx;
    ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png) throw_data("BadPng", "libpng init failed");
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.info) throw_data("BadPng", "libpng init failed");

    if (setjmp(png_jmpbuf(ctx.png))) throw_data("BadPng", "libpng failed decoding '" + path + "'");

    png_init_io(ctx.png, f.get());
    png_set_sig_bytes(ctx.png, 8);
    png_read_info(ctx.png, ctx.info);

    png_uint_32 w = png_get_image_width(ctx.png, ctx.info);
    png_uint_32 h = png_get_image_height(ctx.png, ctx.info);
    int depth = png_get_bit_depth(ctx.png, ctx.info);
    int color = png_get_color_type(ctx.png, ctx.info);

    if (color != PNG_COLOR_TYPE_GRAY)
        throw_data("BadPng", "'" + path + "' is not grayscale");
    if (depth < 8) {
        png_set_expand_gray_1_2_4_to_8(ctx.png);
        depth = 8;
    }
#if defined(PNG_READ_SWAP_SUPPORTED)
    if (depth == 16) png_set_swap(ctx.png); // PNG stores 16-bit big-endian
#endif
    png_read_update_info(ctx.png, ctx.info);

    bit_depth = depth;
    std::vector<png_bytep> rows(h);
    if (depth == 8) {
        out8 = GridU8(static_cast<int>(h), static_cast<int>(w));
        for (png_uint_32 y = 0; y < h; ++y)
            rows[y] = reinterpret_cast<png_bytep>(&out8.at(static_cast<int>(y), 0));
    } else {
        out16 = Grid<uint16_t>(static_cast<int>(h), static_cast<int>(w));
        for (png_uint_32 y = 0; y < h; ++y)
            rows[y] = reinterpret_cast<png_bytep>(&out16.at(static_cast<int>(y), 0));
    }
    png_read_image(ctx.png, rows.data());
    png_read_end(ctx.png, nullptr);
}

void write_gray(const std::string& path, int h, int w, int depth,
                const std::vector<png_bytep>& rows) {
    if (h <= 0 || w <= 0) throw_data("BadPng", "refusing to write empty PNG '" + path + "'");
    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f) throw_data("UnwritableFile", "cannot create PNG '" + path + "'");

    PngWrite ctx;
    ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png) throw_data("BadPng", "libpng init failed");
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.info) throw_data("BadPng", "libpng init failed");

    if (setjmp(png_jmpbuf(ctx.png))) throw_data("BadPng", "libpng failed encoding '" + path + "'");

    png_init_io(ctx.png, f.get());
    png_set_IHDR(ctx.png, ctx.info, static_cast<png_uint_32>(w), static_cast<png_uint_32>(h),
                 depth, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(ctx.png, ctx.info);
#if defined(PNG_WRITE_SWAP_SUPPORTED)
    if (depth == 16) png_set_swap(ctx.png);
#endif
    png_write_image(ctx.png, const_cast<png_bytepp>(rows.data()));
    png_write_end(ctx.png, nullptr);
}

} // namespace

GridU8 read_png_gray8(const std::string& path) {
    int depth = 0;
    GridU8 g8;
    Grid<uint16_t> g16;
    read_gray(path, depth, g8, g16);
    if (depth != 8) throw_data("BadPng", "'" + path + "': expected 8-bit grayscale");
    return g8;
}

Grid<uint16_t> read_png_gray16(const std::string& path) {
    int depth = 0;
    GridU8 g8;
    Grid<uint16_t> g16;
    read_gray(path, depth, g8, g16);
    if (depth != 16) throw_data("BadPng", "'" + path + "': expected 16-bit grayscale");
    return g16;
}

GridF read_png_gray_norm(const std::string& path) {
    int depth = 0;
    GridU8 g8;
    Grid<uint16_t> g16;
    read_gray(path, depth, g8, g16);
    if (depth == 8) {
        GridF out(g8.h, g8.w);
        for (size_t i = 0; i < g8.v.size(); ++i) out.v[i] = g8.v[i] / 255.0;
        return out;
    }
    GridF out(g16.h, g16.w);
    for (size_t i = 0; i < g16.v.size(); ++i) out.v[i] = g16.v[i] / 65535.0;
    return out;
}

void write_png_gray8(const std::string& path, const GridU8& img) {
    std::vector<png_bytep> rows(static_cast<size_t>(img.h));
    for (int y = 0; y < img.h; ++y)
        rows[static_cast<size_t>(y)] =
            const_cast<png_bytep>(reinterpret_cast<const png_byte*>(&img.at(y, 0)));
    write_gray(path, img.h, img.w, 8, rows);
}

void write_png_gray16(const std::string& path, const Grid<uint16_t>& img) {
    std::vector<png_bytep> rows(static_cast<size_t>(img.h));
    for (int y = 0; y < img.h; ++y)
        rows[static_cast<size_t>(y)] =
            const_cast<png_bytep>(reinterpret_cast<const png_byte*>(&img.at(y, 0)));
    write_gray(path, img.h, img.w, 16, rows);
}

} // namespace fgcxr
