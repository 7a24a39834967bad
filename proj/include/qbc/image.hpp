#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qbc {

/// 8-bit grayscale image, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0);

    std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }

    bool operator==(const GrayImage&) const = default;
};

/// Reads PGM (P2/P5, maxval 255) or PNG (8-bit grayscale or RGB).
/// RGB is converted to luma with round(0.299 R + 0.587 G + 0.114 B).
GrayImage load_image(const std::string& path);

void save_pgm_p5(const GrayImage& img, const std::string& path);
void save_pgm_p2(const GrayImage& img, const std::string& path);

/// Rounds dimensions up to the next multiple of `block`, filling new
/// pixels by edge replication. Returns the input unchanged when aligned.
GrayImage pad_to_block_multiple(const GrayImage& img, int block);

enum class SynthKind { Constant, Gradient, Checkerboard };

/// Deterministic synthetic test images. `param` is the constant value for
/// Constant and the tile period for Checkerboard; ignored for Gradient.
GrayImage synth_image(SynthKind kind, int param, int width, int height);

/// Parses an inline synthetic spec such as "synth:checkerboard:8:512x512",
/// "synth:constant:128:64x64" or "synth:gradient:256x256".
GrayImage parse_synth_spec(const std::string& spec);

}  // namespace qbc
