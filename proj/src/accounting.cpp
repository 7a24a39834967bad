#include "qbc/accounting.hpp"

#include <bit>

#include "qbc/error.hpp"

namespace qbc {

namespace {

int log2_exact(int v, const char* what) {
    if (v < 1 || std::popcount(static_cast<unsigned>(v)) != 1)
        throw ConfigError(std::string(what) + " must be a power of two");
    return std::countr_zero(static_cast<unsigned>(v));
}

int ceil_log2(int v) {
    if (v < 1) throw ConfigError("grid dimension must be >= 1");
    return std::bit_width(static_cast<unsigned>(v - 1));
}

}  // namespace

std::string scheme_name(Scheme s) { return s == Scheme::Scmneqr ? "SCMNEQR" : "EFRQI"; }

Scheme parse_scheme(const std::string& name) {
    if (name == "SCMNEQR" || name == "scmneqr") return Scheme::Scmneqr;
    if (name == "EFRQI" || name == "efrqi") return Scheme::Efrqi;
    throw ConfigError("unknown scheme: " + name);
}

std::string block_address_mode_name(BlockAddressMode m) {
    switch (m) {
        case BlockAddressMode::PerBlockAddress: return "per-block-address";
        case BlockAddressMode::FixedPerImage: return "fixed";
        case BlockAddressMode::PerCoefficient: return "per-coefficient";
    }
    return "?";
}

BlockAddressMode parse_block_address_mode(const std::string& name) {
    if (name == "per-block-address") return BlockAddressMode::PerBlockAddress;
    if (name == "fixed") return BlockAddressMode::FixedPerImage;
    if (name == "per-coefficient") return BlockAddressMode::PerCoefficient;
    throw ConfigError("unknown b_e mode: " + name);
}

long long s_state_scmneqr(const QuantumBlock& block) {
    const int lx = log2_exact(block.s_x, "block width");
    const int ly = log2_exact(block.s_y, "block height");
    return static_cast<long long>(lx + ly + 1 + 1) * block.n_tcn();
}

long long s_state_efrqi(const QuantumBlock& block, const EfrqiCostModel& model) {
    const int lx = log2_exact(block.s_x, "block width");
    const int ly = log2_exact(block.s_y, "block height");
    return static_cast<long long>(model.toffoli_passes) * (lx + ly + 1) * block.n_tcn();
}

long long block_position_bits(const QuantumBlock& block, int blocks_x, int blocks_y) {
    if (block.n_tcn() == 0) return 0;
    return ceil_log2(blocks_x) + ceil_log2(blocks_y);
}

BitRateReport bit_rate(const std::vector<QuantumBlock>& blocks, Scheme scheme, int blocks_x, int blocks_y,
                       BlockAddressMode be_mode, const EfrqiCostModel& efrqi) {
    BitRateReport r;
    r.scheme = scheme;
    const long long addr = ceil_log2(blocks_x) + ceil_log2(blocks_y);
    for (const auto& b : blocks) {
        r.n_tcn += b.n_tcn();
        r.clamped_count += b.clamped_count();
        for (const auto& nz : b.nonzeros) r.q_ones += nz.popcount_ones();
        r.s_state += scheme == Scheme::Scmneqr ? s_state_scmneqr(b) : s_state_efrqi(b, efrqi);
        switch (be_mode) {
            case BlockAddressMode::PerBlockAddress:
                r.b_e += block_position_bits(b, blocks_x, blocks_y);
                break;
            case BlockAddressMode::PerCoefficient:
                r.b_e += addr * b.n_tcn();
                break;
            case BlockAddressMode::FixedPerImage:
                break;  // added once below
        }
    }
    if (be_mode == BlockAddressMode::FixedPerImage && r.n_tcn > 0) r.b_e = addr;
    r.s_bit = r.n_tcn;  // one sign bit per non-zero coefficient
    r.a_bit = r.n_tcn;  // one auxiliary engagement per coefficient
    r.br = r.q_ones + r.s_state + r.s_bit + r.a_bit + r.b_e;
    return r;
}

namespace {

TermDelta delta(long long a, long long b) {
    TermDelta d;
    d.absolute = a - b;
    if (b != 0) d.percent = 100.0 * static_cast<double>(a - b) / static_cast<double>(b);
    return d;
}

}  // namespace

ReportComparison compare_report(const BitRateReport& a, const BitRateReport& b) {
    ReportComparison c;
    c.q_ones = delta(a.q_ones, b.q_ones);
    c.s_state = delta(a.s_state, b.s_state);
    c.s_bit = delta(a.s_bit, b.s_bit);
    c.a_bit = delta(a.a_bit, b.a_bit);
    c.b_e = delta(a.b_e, b.b_e);
    c.br = delta(a.br, b.br);
    return c;
}

}  // namespace qbc
