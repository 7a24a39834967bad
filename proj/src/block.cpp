#include "qbc/block.hpp"

#include <cstdlib>

#include "qbc/error.hpp"

namespace qbc {

EncodedValue encode_value(std::int64_t v, int q) {
    if (v == 0) throw ConfigError("zero coefficients are never encoded");
    if (q < 1 || q > 31) throw ConfigError("value qubit count out of range");
    EncodedValue e;
    e.sign = v < 0;
    const std::uint64_t mag = static_cast<std::uint64_t>(v < 0 ? -v : v);
    const std::uint64_t cap = (1ull << q) - 1;
    e.clamped = mag > cap;
    e.bits = static_cast<std::uint32_t>(e.clamped ? cap : mag);
    return e;
}

std::int64_t decode_value(const EncodedValue& e) {
    return e.sign ? -static_cast<std::int64_t>(e.bits) : static_cast<std::int64_t>(e.bits);
}

int QuantumBlock::clamped_count() const {
    int n = 0;
    for (const auto& nz : nonzeros) n += nz.enc.clamped ? 1 : 0;
    return n;
}

RegisterLayout RegisterLayout::for_block(int s_x, int s_y, int q) {
    if (s_x < 1 || s_y < 1 || std::popcount(static_cast<unsigned>(s_x)) != 1 ||
        std::popcount(static_cast<unsigned>(s_y)) != 1)
        throw ConfigError("block dimensions must be powers of two");
    RegisterLayout l;
    l.value_qubits = q;
    l.pos_x_qubits = std::countr_zero(static_cast<unsigned>(s_x));
    l.pos_y_qubits = std::countr_zero(static_cast<unsigned>(s_y));
    return l;
}

QuantumBlock make_quantum_block(std::span<const std::int32_t> coeffs, int s_x, int s_y, int block_x, int block_y,
                                int q) {
    if (coeffs.size() != static_cast<std::size_t>(s_x) * s_y) throw DimensionError("coefficient tile size mismatch");
    QuantumBlock b;
    b.block_x = block_x;
    b.block_y = block_y;
    b.s_x = s_x;
    b.s_y = s_y;
    b.coeffs.assign(coeffs.begin(), coeffs.end());
    for (int y = 0; y < s_y; ++y)
        for (int x = 0; x < s_x; ++x) {
            const std::int32_t v = coeffs[static_cast<std::size_t>(y) * s_x + x];
            if (v == 0) continue;
            b.nonzeros.push_back({v, x, y, encode_value(v, q)});
        }
    return b;
}

std::vector<QuantumBlock> tile_quantum_blocks(std::span<const std::int32_t> plane, int width, int height, int q,
                                              int block) {
    if (width % block != 0 || height % block != 0)
        throw DimensionError("plane dimensions must be multiples of the quantum block size");
    if (plane.size() != static_cast<std::size_t>(width) * height) throw DimensionError("plane size mismatch");

    std::vector<QuantumBlock> blocks;
    std::vector<std::int32_t> tile(static_cast<std::size_t>(block) * block);
    for (int by = 0; by < height / block; ++by)
        for (int bx = 0; bx < width / block; ++bx) {
            for (int y = 0; y < block; ++y)
                for (int x = 0; x < block; ++x)
                    tile[static_cast<std::size_t>(y) * block + x] =
                        plane[static_cast<std::size_t>(by * block + y) * width + bx * block + x];
            blocks.push_back(make_quantum_block(tile, block, block, bx, by, q));
        }
    return blocks;
}

}  // namespace qbc
