#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace qbc {

/// Sign + magnitude encoding of one non-zero coefficient. The magnitude is
/// saturated at 2^q - 1; `clamped` records when saturation happened.
struct EncodedValue {
    bool sign = false;          // true = negative
    std::uint32_t bits = 0;     // magnitude, bit i = qubit i (LSB first)
    bool clamped = false;
};

EncodedValue encode_value(std::int64_t v, int q);

/// Inverse of encode_value for unclamped values.
std::int64_t decode_value(const EncodedValue& e);

/// One non-zero quantized coefficient inside a quantum block, with its
/// local position and qubit encoding.
struct NonzeroCoeff {
    std::int32_t value = 0;
    int x = 0;  // column in [0, s_x)
    int y = 0;  // row in [0, s_y)
    EncodedValue enc;

    int popcount_ones() const { return std::popcount(enc.bits); }
};

/// A tile of the quantized coefficient plane prepared by one circuit.
struct QuantumBlock {
    int block_x = 0;
    int block_y = 0;
    int s_x = 16;
    int s_y = 16;
    std::vector<std::int32_t> coeffs;       // s_x * s_y, row-major
    std::vector<NonzeroCoeff> nonzeros;     // row-major scan order

    int n_tcn() const { return static_cast<int>(nonzeros.size()); }
    int clamped_count() const;
};

/// Qubit register: [value q bits, LSB first][Y bits][X bits][aux].
struct RegisterLayout {
    int value_qubits = 8;
    int pos_y_qubits = 4;
    int pos_x_qubits = 4;

    int total() const { return value_qubits + pos_y_qubits + pos_x_qubits + 1; }
    int y_qubit(int i) const { return value_qubits + i; }
    int x_qubit(int i) const { return value_qubits + pos_y_qubits + i; }
    int aux_qubit() const { return total() - 1; }
    int s_x() const { return 1 << pos_x_qubits; }
    int s_y() const { return 1 << pos_y_qubits; }

    static RegisterLayout for_block(int s_x, int s_y, int q);
};

/// Builds one QuantumBlock from a coefficient tile.
QuantumBlock make_quantum_block(std::span<const std::int32_t> coeffs, int s_x, int s_y, int block_x, int block_y,
                                int q);

/// Tiles a quantized coefficient plane into 16x16 (or `block`-sized) quantum
/// blocks, row-major block order. Dimensions must be multiples of `block`.
std::vector<QuantumBlock> tile_quantum_blocks(std::span<const std::int32_t> plane, int width, int height, int q,
                                              int block = 16);

}  // namespace qbc
