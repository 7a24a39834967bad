#pragma once

#include <cstdint>
#include <vector>

#include "qbc/accounting.hpp"
#include "qbc/block.hpp"
#include "qbc/image.hpp"

namespace qbc {

struct PipelineOptions {
    int value_qubits = 8;
    int quantum_block = 16;  // power of two in [2, 16]
    BlockAddressMode be_mode = BlockAddressMode::PerBlockAddress;
    EfrqiCostModel efrqi;
};

/// Everything one (image, qf) pipeline run produces.
struct QfResult {
    int qf = 1;
    int padded_width = 0;
    int padded_height = 0;
    int blocks_x = 0;
    int blocks_y = 0;
    std::vector<std::int32_t> quantized_plane;  // padded dimensions
    std::vector<QuantumBlock> blocks;
    GrayImage reconstruction;  // cropped back to the original dimensions
    double psnr_db = 0.0;
    long long clamped_count = 0;

    BitRateReport report(Scheme scheme, const PipelineOptions& opts = {}) const;
};

/// pad -> per-8x8 DCT + quantize -> tile -> dequantize + inverse DCT ->
/// clamp -> crop. PSNR is measured on the unpadded region only.
QfResult run_pipeline(const GrayImage& img, int qf, const PipelineOptions& opts = {});

}  // namespace qbc
