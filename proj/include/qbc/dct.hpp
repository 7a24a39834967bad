#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qbc/image.hpp"

namespace qbc {

/// 8x8 block of real DCT coefficients, row-major (u = row, v = column).
struct DctBlock {
    std::array<double, 64> coeffs{};
};

/// Uniformly quantized 8x8 block.
struct QuantizedBlock {
    std::array<std::int32_t, 64> q{};
    int qf = 1;
};

/// Orthonormal 2-D DCT-II with JPEG level shift: subtracts 128 from every
/// sample before transforming.
DctBlock dct2_8x8(const std::array<double, 64>& pixels);

/// Exact inverse of dct2_8x8, including the +128 level shift. Output is not
/// clamped to [0,255].
std::array<double, 64> idct2_8x8(const DctBlock& block);

/// q(u,v) = round_half_away_from_zero(coeff(u,v) / qf).
QuantizedBlock quantize(const DctBlock& block, int qf);

/// coeff(u,v) = q(u,v) * qf.
DctBlock dequantize(const QuantizedBlock& block);

/// Per-8x8-block forward transform of a whole image: DCT + quantization,
/// coefficients reassembled at original coordinates. Dimensions must be
/// multiples of 8. The default entry points run the 8x8 blocks in parallel
/// with OpenMP; qbc::reference holds the plain serial loops the parallel
/// kernels are tested against. Both produce bit-identical planes.
std::vector<std::int32_t> forward_quantize_plane(const GrayImage& img, int qf);

/// Inverse of forward_quantize_plane: dequantize, inverse DCT, round half
/// away from zero, clamp to [0,255].
GrayImage inverse_plane(const std::vector<std::int32_t>& plane, int width, int height, int qf);

namespace reference {
std::vector<std::int32_t> forward_quantize_plane(const GrayImage& img, int qf);
GrayImage inverse_plane(const std::vector<std::int32_t>& plane, int width, int height, int qf);
}  // namespace reference

}  // namespace qbc
