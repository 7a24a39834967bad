#pragma once

#include <vector>

#include "qbc/accounting.hpp"
#include "qbc/image.hpp"
#include "qbc/pipeline.hpp"

namespace qbc {

/// Mean squared error over two equally-sized images.
double mse(const GrayImage& a, const GrayImage& b);

/// 10 log10(255^2 / MSE); +infinity when MSE = 0.
double psnr(const GrayImage& a, const GrayImage& b);

/// One point of a rate-distortion curve.
struct RdPoint {
    int qf = 1;
    long long br_bits = 0;
    double psnr_db = 0.0;  // +infinity when reconstruction is exact
    Scheme scheme = Scheme::Scmneqr;
};

/// Full pipeline per quantization factor: pad, DCT + quantize, tile, bit
/// rate, reconstruct, PSNR against the unpadded original. Points ordered by
/// ascending qf.
std::vector<RdPoint> rd_sweep(const GrayImage& img, const std::vector<int>& qfs, Scheme scheme,
                              const PipelineOptions& opts = {});

}  // namespace qbc
