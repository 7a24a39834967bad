#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbc/block.hpp"

namespace qbc {

enum class Scheme { Scmneqr, Efrqi };

std::string scheme_name(Scheme s);
Scheme parse_scheme(const std::string& name);

/// How block-address overhead (b_e) is charged. PerBlockAddress charges
/// ceil(log2) of each grid dimension once per non-empty block; FixedPerImage
/// charges it once for the whole image; PerCoefficient charges it per
/// non-zero coefficient.
enum class BlockAddressMode { PerBlockAddress, FixedPerImage, PerCoefficient };

std::string block_address_mode_name(BlockAddressMode m);
BlockAddressMode parse_block_address_mode(const std::string& name);

/// The EFRQI baseline charges `toffoli_passes` full position connections per
/// coefficient (connect + uncompute with the same gate).
struct EfrqiCostModel {
    int toffoli_passes = 2;
};

struct BitRateReport {
    Scheme scheme = Scheme::Scmneqr;
    long long n_tcn = 0;
    long long q_ones = 0;
    long long s_state = 0;
    long long s_bit = 0;
    long long a_bit = 0;
    long long b_e = 0;
    long long br = 0;
    long long clamped_count = 0;
};

/// State-connection bits per block: (log2 S_X + log2 S_Y + 1 + 1) * N_tcn.
long long s_state_scmneqr(const QuantumBlock& block);

/// Baseline: toffoli_passes * (log2 S_X + log2 S_Y + 1) * N_tcn.
long long s_state_efrqi(const QuantumBlock& block, const EfrqiCostModel& model = {});

/// Address bits for one block under PerBlockAddress semantics: 0 when the
/// block is empty, else ceil(log2 blocks_x) + ceil(log2 blocks_y).
long long block_position_bits(const QuantumBlock& block, int blocks_x, int blocks_y);

/// Eq-style aggregate: br = q_ones + s_state + s_bit + a_bit + b_e, exact
/// integer arithmetic throughout.
BitRateReport bit_rate(const std::vector<QuantumBlock>& blocks, Scheme scheme, int blocks_x, int blocks_y,
                       BlockAddressMode be_mode = BlockAddressMode::PerBlockAddress,
                       const EfrqiCostModel& efrqi = {});

struct TermDelta {
    long long absolute = 0;
    std::optional<double> percent;  // absent when the reference term is 0
};

struct ReportComparison {
    TermDelta q_ones, s_state, s_bit, a_bit, b_e, br;
};

/// Per-term deltas of a relative to b (a - b, percentage of b).
ReportComparison compare_report(const BitRateReport& a, const BitRateReport& b);

}  // namespace qbc
