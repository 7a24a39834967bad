#include "qbc/dct.hpp"

#include <algorithm>
#include <cmath>

#include "qbc/error.hpp"

namespace qbc {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Orthonormal DCT-II basis matrix: M[u][x] = (C_u / 2) cos((2x+1) u pi / 16).
struct Basis {
    double m[8][8];
    Basis() {
        for (int u = 0; u < 8; ++u) {
            const double cu = (u == 0) ? 1.0 / std::sqrt(2.0) : 1.0;
            for (int x = 0; x < 8; ++x) m[u][x] = 0.5 * cu * std::cos((2 * x + 1) * u * kPi / 16.0);
        }
    }
};

const Basis kBasis;

// out = M * in * M^T, separable.
void apply_forward(const double in[8][8], double out[8][8]) {
    double tmp[8][8];
    for (int u = 0; u < 8; ++u)
        for (int y = 0; y < 8; ++y) {
            double s = 0.0;
            for (int x = 0; x < 8; ++x) s += kBasis.m[u][x] * in[x][y];
            tmp[u][y] = s;
        }
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v) {
            double s = 0.0;
            for (int y = 0; y < 8; ++y) s += tmp[u][y] * kBasis.m[v][y];
            out[u][v] = s;
        }
}

// out = M^T * in * M.
void apply_inverse(const double in[8][8], double out[8][8]) {
    double tmp[8][8];
    for (int x = 0; x < 8; ++x)
        for (int v = 0; v < 8; ++v) {
            double s = 0.0;
            for (int u = 0; u < 8; ++u) s += kBasis.m[u][x] * in[u][v];
            tmp[x][v] = s;
        }
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            double s = 0.0;
            for (int v = 0; v < 8; ++v) s += tmp[x][v] * kBasis.m[v][y];
            out[x][y] = s;
        }
}

std::int32_t round_half_away(double v) { return static_cast<std::int32_t>(std::llround(v)); }

std::uint8_t clamp_pixel(double v) {
    const long r = std::llround(v);
    return static_cast<std::uint8_t>(std::clamp(r, 0L, 255L));
}

// One 8x8 tile: level shift, DCT, quantize, write back at the same coordinates.
void forward_block(const GrayImage& img, int bx, int by, int qf, std::vector<std::int32_t>& plane) {
    double f[8][8], c[8][8];
    for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x) f[y][x] = static_cast<double>(img.at(bx + x, by + y)) - 128.0;
    apply_forward(f, c);
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v)
            plane[static_cast<std::size_t>(by + u) * img.width + bx + v] = round_half_away(c[u][v] / qf);
}

void inverse_block(const std::vector<std::int32_t>& plane, int w, int bx, int by, int qf, GrayImage& img) {
    double c[8][8], f[8][8];
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v)
            c[u][v] = static_cast<double>(plane[static_cast<std::size_t>(by + u) * w + bx + v]) * qf;
    apply_inverse(c, f);
    for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x) img.at(bx + x, by + y) = clamp_pixel(f[y][x] + 128.0);
}

void check_plane_dims(int w, int h, int qf) {
    if (w % 8 != 0 || h % 8 != 0) throw DimensionError("plane dimensions must be multiples of 8");
    if (qf < 1) throw ConfigError("quantization factor must be >= 1");
}

}  // namespace

DctBlock dct2_8x8(const std::array<double, 64>& pixels) {
    double f[8][8], c[8][8];
    for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x) f[y][x] = pixels[static_cast<std::size_t>(y) * 8 + x] - 128.0;
    apply_forward(f, c);
    DctBlock out;
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v) out.coeffs[static_cast<std::size_t>(u) * 8 + v] = c[u][v];
    return out;
}

std::array<double, 64> idct2_8x8(const DctBlock& block) {
    double c[8][8], f[8][8];
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v) c[u][v] = block.coeffs[static_cast<std::size_t>(u) * 8 + v];
    apply_inverse(c, f);
    std::array<double, 64> out{};
    for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x) out[static_cast<std::size_t>(y) * 8 + x] = f[y][x] + 128.0;
    return out;
}

QuantizedBlock quantize(const DctBlock& block, int qf) {
    if (qf < 1) throw ConfigError("quantization factor must be >= 1");
    QuantizedBlock out;
    out.qf = qf;
    for (int i = 0; i < 64; ++i) out.q[i] = round_half_away(block.coeffs[i] / qf);
    return out;
}

DctBlock dequantize(const QuantizedBlock& block) {
    DctBlock out;
    for (int i = 0; i < 64; ++i) out.coeffs[i] = static_cast<double>(block.q[i]) * block.qf;
    return out;
}

std::vector<std::int32_t> forward_quantize_plane(const GrayImage& img, int qf) {
    check_plane_dims(img.width, img.height, qf);
    std::vector<std::int32_t> plane(img.data.size());
    const int nbx = img.width / 8, nby = img.height / 8;
#pragma omp parallel for collapse(2) schedule(static)
    for (int by = 0; by < nby; ++by)
        for (int bx = 0; bx < nbx; ++bx) forward_block(img, bx * 8, by * 8, qf, plane);
    return plane;
}

GrayImage inverse_plane(const std::vector<std::int32_t>& plane, int width, int height, int qf) {
    check_plane_dims(width, height, qf);
    if (plane.size() != static_cast<std::size_t>(width) * height) throw DimensionError("plane size mismatch");
    GrayImage img(width, height);
    const int nbx = width / 8, nby = height / 8;
#pragma omp parallel for collapse(2) schedule(static)
    for (int by = 0; by < nby; ++by)
        for (int bx = 0; bx < nbx; ++bx) inverse_block(plane, width, bx * 8, by * 8, qf, img);
    return img;
}

namespace reference {

std::vector<std::int32_t> forward_quantize_plane(const GrayImage& img, int qf) {
    check_plane_dims(img.width, img.height, qf);
    std::vector<std::int32_t> plane(img.data.size());
    for (int by = 0; by < img.height; by += 8)
        for (int bx = 0; bx < img.width; bx += 8) forward_block(img, bx, by, qf, plane);
    return plane;
}

GrayImage inverse_plane(const std::vector<std::int32_t>& plane, int width, int height, int qf) {
    check_plane_dims(width, height, qf);
    if (plane.size() != static_cast<std::size_t>(width) * height) throw DimensionError("plane size mismatch");
    GrayImage img(width, height);
    for (int by = 0; by < height; by += 8)
        for (int bx = 0; bx < width; bx += 8) inverse_block(plane, width, bx, by, qf, img);
    return img;
}

}  // namespace reference

}  // namespace qbc
