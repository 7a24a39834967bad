#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "qbc/block.hpp"
#include "qbc/error.hpp"

using namespace qbc;

TEST_CASE("encode_value binary expansion") {
    const EncodedValue e5 = encode_value(5, 8);
    CHECK_FALSE(e5.sign);
    CHECK(e5.bits == 0b101u);
    CHECK_FALSE(e5.clamped);

    const EncodedValue em1 = encode_value(-1, 8);
    CHECK(em1.sign);
    CHECK(em1.bits == 1u);

    const EncodedValue big = encode_value(300, 8);
    CHECK(big.bits == 255u);
    CHECK(big.clamped);

    CHECK_THROWS_AS(encode_value(0, 8), ConfigError);
}

TEST_CASE("encode/decode round trip for in-range values") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> d(-255, 255);
    for (int t = 0; t < 500; ++t) {
        int v = d(rng);
        if (v == 0) v = 1;
        CHECK(decode_value(encode_value(v, 8)) == v);
    }
}

TEST_CASE("popcount of magnitude bits") {
    NonzeroCoeff nz;
    nz.enc = encode_value(5, 8);
    CHECK(nz.popcount_ones() == 2);
    nz.enc = encode_value(1, 8);
    CHECK(nz.popcount_ones() == 1);
    nz.enc = encode_value(255, 8);
    CHECK(nz.popcount_ones() == 8);
}

TEST_CASE("tiling an all-zero plane") {
    std::vector<std::int32_t> plane(16 * 16, 0);
    const auto blocks = tile_quantum_blocks(plane, 16, 16, 8);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].n_tcn() == 0);
}

TEST_CASE("tiling maps global to local coordinates") {
    std::vector<std::int32_t> plane(32 * 32, 0);
    plane[2 * 32 + 17] = 9;  // global (x=17, y=2)
    const auto blocks = tile_quantum_blocks(plane, 32, 32, 8);
    REQUIRE(blocks.size() == 4);
    CHECK(blocks[0].n_tcn() == 0);
    REQUIRE(blocks[1].n_tcn() == 1);  // block (1,0)
    CHECK(blocks[1].block_x == 1);
    CHECK(blocks[1].block_y == 0);
    CHECK(blocks[1].nonzeros[0].x == 1);
    CHECK(blocks[1].nonzeros[0].y == 2);
    CHECK(blocks[1].nonzeros[0].value == 9);
}

TEST_CASE("nonzeros come out in row-major order") {
    std::vector<std::int32_t> plane(16 * 16, 0);
    plane[0] = 5;            // (0,0)
    plane[1 * 16 + 3] = -2;  // (3,1)
    const auto blocks = tile_quantum_blocks(plane, 16, 16, 8);
    REQUIRE(blocks[0].n_tcn() == 2);
    CHECK(blocks[0].nonzeros[0].x == 0);
    CHECK(blocks[0].nonzeros[0].y == 0);
    CHECK(blocks[0].nonzeros[0].value == 5);
    CHECK(blocks[0].nonzeros[1].x == 3);
    CHECK(blocks[0].nonzeros[1].y == 1);
    CHECK(blocks[0].nonzeros[1].value == -2);
    CHECK(blocks[0].nonzeros[1].enc.sign);
}

TEST_CASE("tiling preserves every non-zero and the full plane") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> val(-300, 300);
    std::uniform_int_distribution<int> coord(0, 63);
    std::vector<std::int32_t> plane(64 * 64, 0);
    for (int i = 0; i < 200; ++i) plane[coord(rng) * 64 + coord(rng)] = val(rng);

    const auto blocks = tile_quantum_blocks(plane, 64, 64, 8);
    long long total_nz = 0;
    std::vector<std::int32_t> rebuilt(plane.size(), 0);
    for (const auto& b : blocks) {
        total_nz += b.n_tcn();
        for (int y = 0; y < 16; ++y)
            for (int x = 0; x < 16; ++x)
                rebuilt[static_cast<std::size_t>(b.block_y * 16 + y) * 64 + b.block_x * 16 + x] =
                    b.coeffs[static_cast<std::size_t>(y) * 16 + x];
    }
    CHECK(rebuilt == plane);
    const long long plane_nz = std::count_if(plane.begin(), plane.end(), [](int v) { return v != 0; });
    CHECK(total_nz == plane_nz);
}

TEST_CASE("tiling rejects misaligned planes") {
    std::vector<std::int32_t> plane(24 * 16, 0);
    CHECK_THROWS_AS(tile_quantum_blocks(plane, 24, 16, 8), DimensionError);
}

TEST_CASE("register layout matches q + 2n + 1") {
    const RegisterLayout l = RegisterLayout::for_block(16, 16, 8);
    CHECK(l.total() == 17);
    CHECK(l.pos_x_qubits == 4);
    CHECK(l.pos_y_qubits == 4);
    CHECK(l.aux_qubit() == 16);
    CHECK_THROWS_AS(RegisterLayout::for_block(12, 16, 8), ConfigError);
}
