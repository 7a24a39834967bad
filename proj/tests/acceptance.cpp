// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. All thresholds are pinned here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qbc/accounting.hpp"
#include "qbc/dct.hpp"
#include "qbc/harness.hpp"
#include "qbc/metrics.hpp"
#include "qbc/sim.hpp"

using namespace qbc;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, double seconds) {
    std::printf("%s: criterion %d — %s (%.2fs)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(), seconds);
    if (!pass) ++g_failures;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

QuantumBlock random_quantum_block(std::mt19937& rng, int size, int q, int max_fill) {
    std::uniform_int_distribution<int> val(-400, 400);
    std::uniform_int_distribution<int> coord(0, size - 1);
    std::uniform_int_distribution<int> fill(0, max_fill);
    std::vector<std::int32_t> coeffs(static_cast<std::size_t>(size) * size, 0);
    const int n = fill(rng);
    for (int i = 0; i < n; ++i) {
        int v = val(rng);
        if (v == 0) v = 1;
        coeffs[static_cast<std::size_t>(coord(rng)) * size + coord(rng)] = v;
    }
    return make_quantum_block(coeffs, size, size, 0, 0, q);
}

std::vector<GrayImage> test_images(int size) {
    return {
        synth_image(SynthKind::Gradient, 0, size, size),
        synth_image(SynthKind::Checkerboard, 2, size, size),
        synth_image(SynthKind::Checkerboard, 4, size, size),
        synth_image(SynthKind::Checkerboard, 8, size, size),
        synth_image(SynthKind::Constant, 200, size, size),
    };
}

const std::vector<int> kQfGrid = {1, 2, 4, 8, 16, 32, 64};

// --- criterion 1: Eq. 8 exactness on random blocks --------------------------

void criterion_1() {
    Timer t;
    std::mt19937 rng(101);
    bool ok = true;
    const int sizes[] = {2, 4, 8, 16};
    for (int i = 0; i < 1000 && ok; ++i) {
        const int size = sizes[i % 4];
        const QuantumBlock b = random_quantum_block(rng, size, 8, size * size / 2);
        // Independent count of the non-zero entries.
        long long n = 0;
        for (auto v : b.coeffs) n += v != 0 ? 1 : 0;
        const long long lg = std::lround(std::log2(double(size)));
        ok = ok && s_state_scmneqr(b) == (2 * lg + 2) * n;
        if (size == 16) ok = ok && s_state_scmneqr(b) == 10 * n;
    }
    report(1, "s_state = (log2 Sx + log2 Sy + 2) * N_tcn, exact, sizes {2,4,8,16}", ok, t.seconds());
}

// --- criteria 2 + 3: bit-rate identity and directional compression ----------

void criteria_2_3() {
    Timer t;
    bool identity_ok = true;
    bool directional_ok = true;
    for (int size : {64, 128, 512}) {
        for (const GrayImage& img : test_images(size)) {
            for (int qf : kQfGrid) {
                const QfResult r = run_pipeline(img, qf);
                const BitRateReport s = r.report(Scheme::Scmneqr);
                const BitRateReport e = r.report(Scheme::Efrqi);
                identity_ok = identity_ok && s.br == s.q_ones + s.s_state + s.s_bit + s.a_bit + s.b_e &&
                              e.br == e.q_ones + e.s_state + e.s_bit + e.a_bit + e.b_e;
                if (s.n_tcn >= 1) {
                    directional_ok = directional_ok && s.br < e.br;
                    directional_ok = directional_ok && s.s_state * 18 == e.s_state * 10;
                }
            }
        }
    }
    const double secs = t.seconds();
    report(2, "BR = q_ones + S_state + S_bit + A_bit + B_e on every report", identity_ok, secs);
    report(3, "br(SCMNEQR) < br(EFRQI) whenever N_tcn >= 1, s_state ratio exactly 10/18", directional_ok, secs);
}

// --- criterion 4: EFRQI circuit prepares the analytic state -----------------

void criterion_4() {
    Timer t;
    bool ok = true;

    // Exhaustive 2x2, q=2, magnitudes 0..3 on every position.
    for (int a = 0; a < 4 && ok; ++a)
        for (int b = 0; b < 4 && ok; ++b)
            for (int c = 0; c < 4 && ok; ++c)
                for (int d = 0; d < 4 && ok; ++d) {
                    const QuantumBlock blk = make_quantum_block(std::vector<std::int32_t>{a, b, c, d}, 2, 2, 0, 0, 2);
                    const RegisterLayout layout = RegisterLayout::for_block(2, 2, 2);
                    const double f =
                        fidelity(expected_state(blk, layout), simulate(build_efrqi_circuit(blk, layout), SimMode::Unitary));
                    ok = ok && f >= 1.0 - 1e-10;
                }

    // 50 random 4x4 q=4 blocks.
    std::mt19937 rng(401);
    for (int i = 0; i < 50 && ok; ++i) {
        std::uniform_int_distribution<int> val(-15, 15);
        std::vector<std::int32_t> coeffs(16);
        for (auto& v : coeffs) v = val(rng);
        const QuantumBlock blk = make_quantum_block(coeffs, 4, 4, 0, 0, 4);
        const RegisterLayout layout = RegisterLayout::for_block(4, 4, 4);
        const double f =
            fidelity(expected_state(blk, layout), simulate(build_efrqi_circuit(blk, layout), SimMode::Unitary));
        ok = ok && f >= 1.0 - 1e-10;
    }

    // 4 full 16x16 q=8 blocks taken from a real pipeline run.
    const GrayImage img = synth_image(SynthKind::Checkerboard, 4, 64, 64);
    const QfResult r = run_pipeline(img, 8);
    int done = 0;
    for (const auto& blk : r.blocks) {
        if (done == 4) break;
        ++done;
        const RegisterLayout layout = RegisterLayout::for_block(16, 16, 8);
        const double f =
            fidelity(expected_state(blk, layout), simulate(build_efrqi_circuit(blk, layout), SimMode::Unitary));
        ok = ok && f >= 1.0 - 1e-10;
    }
    ok = ok && done == 4;
    report(4, "EFRQI statevector fidelity vs analytic target >= 1 - 1e-10 (256 + 50 + 4 blocks)", ok, t.seconds());
}

// --- criterion 5: reset-gate semantics ---------------------------------------

void criterion_5() {
    Timer t;
    bool ok = true;

    // Direct channel-faithful checks on small and full-size blocks.
    std::mt19937 rng(501);
    std::vector<QuantumBlock> cases;
    for (int i = 0; i < 20; ++i) {
        QuantumBlock b = random_quantum_block(rng, 2, 8, 3);
        if (b.n_tcn() >= 1) cases.push_back(std::move(b));
    }
    for (int i = 0; i < 10; ++i) {
        QuantumBlock b = random_quantum_block(rng, 4, 8, 8);
        if (b.n_tcn() >= 1) cases.push_back(std::move(b));
    }
    cases.push_back(random_quantum_block(rng, 16, 8, 6));  // sparse full-size block
    while (cases.back().n_tcn() == 0) cases.back() = random_quantum_block(rng, 16, 8, 6);

    for (const auto& blk : cases) {
        const RegisterLayout layout = RegisterLayout::for_block(blk.s_x, blk.s_y, 8);
        const QuantumState target = expected_state(blk, layout);
        const QuantumState channel = simulate(build_scmneqr_circuit(blk, layout), SimMode::Channel);
        ok = ok && fidelity(target, channel) < 1.0 - 1e-6;

        const DecodeResult dec = decode_block(channel, layout);
        ok = ok && dec.branch_position_gaps > 0;
        for (int y = 0; y < blk.s_y && ok; ++y)
            for (int x = 0; x < blk.s_x && ok; ++x) {
                const std::int32_t v = blk.coeffs[static_cast<std::size_t>(y) * blk.s_x + x];
                if (v != 0 && encode_value(v, 8).clamped) continue;  // only unclamped must decode exactly
                const std::uint32_t want = v == 0 ? 0u : encode_value(v, 8).bits;
                ok = ok && dec.at(x, y).has_value() && *dec.at(x, y) == want;
            }
    }

    // The verify command records both numbers.
    const fs::path dir = fs::temp_directory_path() / "qbc_acceptance" / "verify";
    fs::remove_all(dir);
    RunConfig cfg;
    cfg.input = "synth:checkerboard:4:32x32";
    cfg.qfs = {16};
    cfg.verify_circuits = true;
    cfg.verify_block_limit = 2;
    cfg.output_dir = dir.string();
    ok = ok && cmd_verify(cfg) == 0;
    std::ifstream csv(dir / "verify.csv");
    std::string line;
    std::getline(csv, line);  // header
    int rows = 0;
    while (std::getline(csv, line)) {
        ++rows;
        std::istringstream row(line);
        std::string cell;
        for (int col = 0; col < 4; ++col) std::getline(row, cell, ',');
        const double f_efrqi = std::stod(cell);
        std::getline(row, cell, ',');
        const double f_channel = std::stod(cell);
        ok = ok && f_efrqi >= 0.9999999999 && f_channel < 1.0 - 1e-6;
    }
    ok = ok && rows > 0;
    report(5, "channel-faithful SCMNEQR fidelity < 1, idealized decode exact, recorded in verify.csv", ok,
           t.seconds());
}

// --- criterion 6: DCT round trip ---------------------------------------------

void criterion_6() {
    Timer t;
    std::mt19937 rng(601);
    std::uniform_real_distribution<double> d(0.0, 255.0);
    bool ok = true;
    for (int i = 0; i < 100000 && ok; ++i) {
        std::array<double, 64> pix{};
        for (auto& p : pix) p = d(rng);
        const DctBlock b = dct2_8x8(pix);
        const auto back = idct2_8x8(b);
        double e_pix = 0.0, e_coef = 0.0;
        for (int j = 0; j < 64; ++j) {
            ok = ok && std::abs(back[j] - pix[j]) < 1e-9;
            e_pix += (pix[j] - 128.0) * (pix[j] - 128.0);
            e_coef += b.coeffs[j] * b.coeffs[j];
        }
        ok = ok && std::abs(e_coef - e_pix) <= 1e-6 * std::max(e_pix, 1.0);
    }
    report(6, "idct(dct(x)) = x within 1e-9 and Parseval within 1e-6 over 1e5 random blocks", ok, t.seconds());
}

// --- criterion 7: rate-distortion shape --------------------------------------

void criterion_7() {
    Timer t;
    bool ok = true;
    for (const GrayImage& img : test_images(128)) {
        long long prev_ntcn = -1, prev_br = -1;
        for (int qf : kQfGrid) {
            const QfResult r = run_pipeline(img, qf);
            const BitRateReport rep = r.report(Scheme::Scmneqr);
            if (prev_ntcn >= 0) {
                ok = ok && rep.n_tcn <= prev_ntcn;
                ok = ok && rep.br <= prev_br;
            }
            prev_ntcn = rep.n_tcn;
            prev_br = rep.br;
        }
    }

    const GrayImage gradient = synth_image(SynthKind::Gradient, 0, 128, 128);
    ok = ok && run_pipeline(gradient, 1).psnr_db >= 40.0;

    const GrayImage checker = synth_image(SynthKind::Checkerboard, 4, 128, 128);
    const double p1 = run_pipeline(checker, 1).psnr_db;
    const double p64 = run_pipeline(checker, 64).psnr_db;
    ok = ok && p64 < p1;

    report(7, "N_tcn and br non-increasing in qf; gradient PSNR(qf=1) >= 40 dB; checkerboard PSNR(64) < PSNR(1)", ok,
           t.seconds());
}

// --- criterion 8: determinism -------------------------------------------------

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_8() {
    Timer t;
    RunConfig cfg;
    cfg.input = "synth:checkerboard:8:64x64";
    cfg.qfs = {1, 8, 64};
    const fs::path base = fs::temp_directory_path() / "qbc_acceptance";
    const fs::path d1 = base / "det_a", d2 = base / "det_b";
    fs::remove_all(d1);
    fs::remove_all(d2);

    bool ok = true;
    cfg.output_dir = d1.string();
    ok = ok && cmd_rdc(cfg) == 0 && cmd_compress(cfg) == 0;
    cfg.output_dir = d2.string();
    ok = ok && cmd_rdc(cfg) == 0 && cmd_compress(cfg) == 0;

    ok = ok && slurp(d1 / "rdc.csv") == slurp(d2 / "rdc.csv");
    ok = ok && slurp(d1 / "rdc.dat") == slurp(d2 / "rdc.dat");
    for (int qf : cfg.qfs) {
        const std::string name = "recon_qf" + std::to_string(qf) + ".pgm";
        ok = ok && !slurp(d1 / name).empty() && slurp(d1 / name) == slurp(d2 / name);
    }
    report(8, "identical configs produce byte-identical rdc.csv, rdc.dat and reconstructions", ok, t.seconds());
}

}  // namespace

int main() {
    criterion_1();
    criteria_2_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
