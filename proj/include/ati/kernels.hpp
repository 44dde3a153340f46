#pragma once

#include <vector>

namespace ati {

// Row-major grayscale raster, values nominally in [0,1] (the Laplacian
// response buffer reuses the type with unbounded values).
struct Image {
    int w = 0;
    int h = 0;
    std::vector<double> px;

    Image() = default;
    Image(int width, int height, double fill = 0.0)
        : w(width), h(height), px(static_cast<size_t>(width) * height, fill) {}

    double& at(int x, int y) { return px[static_cast<size_t>(y) * w + x]; }
    double at(int x, int y) const { return px[static_cast<size_t>(y) * w + x]; }
    size_t size() const { return px.size(); }
};

namespace kernels {

// Images at least this large take the OpenMP path through the dispatchers;
// below it thread startup costs more than the loop.
constexpr int kParallelMinPixels = 1 << 16;

// Every *_omp kernel is bit-identical to its serial reference for any thread
// count: per-pixel kernels have independent outputs, and reductions combine
// fixed per-row partials in row order.

// Length-k horizontal box filter, borders clamped. k <= 1 copies.
void box_blur_h_serial(const Image& in, Image& out, int k);
void box_blur_h_omp(const Image& in, Image& out, int k);
void box_blur_h(const Image& in, Image& out, int k);

// out = clip(gain * in + noise, 0, 1); noise may be null.
void shade_serial(const Image& in, Image& out, double gain, const double* noise);
void shade_omp(const Image& in, Image& out, double gain, const double* noise);
void shade(const Image& in, Image& out, double gain, const double* noise);

// Exact area-weighted average onto a tw x th raster.
void area_downsample_serial(const Image& in, Image& out, int tw, int th);
void area_downsample_omp(const Image& in, Image& out, int tw, int th);
void area_downsample(const Image& in, Image& out, int tw, int th);

// 3x3 Laplacian [[0,1,0],[1,-4,1],[0,1,0]] over the valid interior; the
// response is (w-2) x (h-2) and the input is pre-scaled by the caller.
void laplacian_response_serial(const Image& in, Image& out);
void laplacian_response_omp(const Image& in, Image& out);
void laplacian_response(const Image& in, Image& out);

// Population variance with a deterministic two-pass, row-partial reduction.
double population_variance_serial(const Image& in);
double population_variance_omp(const Image& in);
double population_variance(const Image& in);

// Mean pixel value (same reduction scheme).
double mean_pixel_serial(const Image& in);
double mean_pixel_omp(const Image& in);
double mean_pixel(const Image& in);

// Fraction of pixels >= level.
double fraction_at_least_serial(const Image& in, double level);
double fraction_at_least_omp(const Image& in, double level);
double fraction_at_least(const Image& in, double level);

}  // namespace kernels

}  // namespace ati
