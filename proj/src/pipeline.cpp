#include "qbc/pipeline.hpp"

#include <bit>

#include "qbc/dct.hpp"
#include "qbc/error.hpp"
#include "qbc/metrics.hpp"

namespace qbc {

namespace {

void check_options(const PipelineOptions& opts) {
    if (opts.value_qubits < 1 || opts.value_qubits > 12) throw ConfigError("value qubit count must be in [1,12]");
    const int b = opts.quantum_block;
    if (b < 2 || b > 16 || std::popcount(static_cast<unsigned>(b)) != 1)
        throw ConfigError("quantum block must be a power of two in [2,16]");
}

}  // namespace

BitRateReport QfResult::report(Scheme scheme, const PipelineOptions& opts) const {
    return bit_rate(blocks, scheme, blocks_x, blocks_y, opts.be_mode, opts.efrqi);
}

QfResult run_pipeline(const GrayImage& img, int qf, const PipelineOptions& opts) {
    check_options(opts);
    if (qf < 1) throw ConfigError("quantization factor must be >= 1");

    // Pad to the quantum block grid; 16 also covers the 8x8 DCT tiling, and
    // smaller power-of-two blocks still need 8-alignment for the DCT.
    const int align = std::max(opts.quantum_block, 8);
    const GrayImage padded = pad_to_block_multiple(img, align);

    QfResult r;
    r.qf = qf;
    r.padded_width = padded.width;
    r.padded_height = padded.height;
    r.blocks_x = padded.width / opts.quantum_block;
    r.blocks_y = padded.height / opts.quantum_block;

    r.quantized_plane = forward_quantize_plane(padded, qf);
    r.blocks = tile_quantum_blocks(r.quantized_plane, padded.width, padded.height, opts.value_qubits,
                                   opts.quantum_block);
    for (const auto& b : r.blocks) r.clamped_count += b.clamped_count();

    GrayImage recon = inverse_plane(r.quantized_plane, padded.width, padded.height, qf);
    if (recon.width != img.width || recon.height != img.height) {
        GrayImage cropped(img.width, img.height);
        for (int y = 0; y < img.height; ++y)
            for (int x = 0; x < img.width; ++x) cropped.at(x, y) = recon.at(x, y);
        recon = std::move(cropped);
    }
    r.reconstruction = std::move(recon);
    r.psnr_db = psnr(img, r.reconstruction);
    return r;
}

}  // namespace qbc
