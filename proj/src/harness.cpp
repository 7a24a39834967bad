#include "qbc/harness.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "qbc/error.hpp"
#include "qbc/metrics.hpp"
#include "qbc/sim.hpp"

namespace qbc {

namespace {

namespace fs = std::filesystem;

std::string format_double(double v, int precision = 6) {
    if (std::isinf(v)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

std::string units_name(DisplayUnits u) {
    switch (u) {
        case DisplayUnits::Bits: return "bits";
        case DisplayUnits::KB: return "KB";
        case DisplayUnits::MB: return "MB";
    }
    return "?";
}

std::string display_bits(long long bits, DisplayUnits u) {
    switch (u) {
        case DisplayUnits::Bits: return std::to_string(bits) + " bits";
        case DisplayUnits::KB: return format_double(static_cast<double>(bits) / 8.0 / 1024.0, 3) + " KB";
        case DisplayUnits::MB: return format_double(static_cast<double>(bits) / 8.0 / 1024.0 / 1024.0, 3) + " MB";
    }
    return "?";
}

fs::path prepare_output_dir(const RunConfig& cfg) {
    fs::path dir = cfg.output_dir.empty() ? fs::path(".") : fs::path(cfg.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string());
    return dir;
}

std::ofstream open_out(const fs::path& p) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw IoError("cannot write " + p.string());
    return out;
}

void write_run_json(const RunConfig& cfg, const fs::path& path) {
    nlohmann::json j;
    j["input"] = cfg.input;
    j["qfs"] = cfg.qfs;
    std::vector<std::string> schemes;
    for (auto s : cfg.schemes) schemes.push_back(scheme_name(s));
    j["schemes"] = schemes;
    j["q"] = cfg.value_qubits;
    j["block"] = cfg.quantum_block;
    j["b_e_mode"] = block_address_mode_name(cfg.be_mode);
    j["output_dir"] = cfg.output_dir;
    j["verify_circuits"] = cfg.verify_circuits;
    j["verify_block_limit"] = cfg.verify_block_limit;
    j["units"] = units_name(cfg.units);
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

}  // namespace

void RunConfig::validate() const {
    if (input.empty()) throw ConfigError("no input given");
    if (qfs.empty()) throw ConfigError("qf list must not be empty");
    for (int qf : qfs)
        if (qf < 1) throw ConfigError("quantization factors must be >= 1");
    if (schemes.empty()) throw ConfigError("scheme list must not be empty");
    if (value_qubits < 1 || value_qubits > 12) throw ConfigError("q must be in [1,12]");
    if (quantum_block < 2 || quantum_block > 16 || std::popcount(static_cast<unsigned>(quantum_block)) != 1)
        throw ConfigError("block must be a power of two in [2,16]");
    if (verify_block_limit < 1) throw ConfigError("verify_block_limit must be >= 1");
}

PipelineOptions RunConfig::pipeline_options() const {
    PipelineOptions o;
    o.value_qubits = value_qubits;
    o.quantum_block = quantum_block;
    o.be_mode = be_mode;
    return o;
}

void load_config_json(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("bad config JSON: " + std::string(e.what()));
    }
    if (j.contains("input")) cfg.input = j["input"].get<std::string>();
    if (j.contains("qfs")) cfg.qfs = j["qfs"].get<std::vector<int>>();
    if (j.contains("schemes")) {
        cfg.schemes.clear();
        for (const auto& s : j["schemes"]) cfg.schemes.push_back(parse_scheme(s.get<std::string>()));
    }
    if (j.contains("q")) cfg.value_qubits = j["q"].get<int>();
    if (j.contains("block")) cfg.quantum_block = j["block"].get<int>();
    if (j.contains("b_e_mode")) cfg.be_mode = parse_block_address_mode(j["b_e_mode"].get<std::string>());
    if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();
    if (j.contains("verify_circuits")) cfg.verify_circuits = j["verify_circuits"].get<bool>();
    if (j.contains("verify_block_limit")) cfg.verify_block_limit = j["verify_block_limit"].get<int>();
}

GrayImage load_input(const RunConfig& cfg) {
    if (cfg.input.rfind("synth:", 0) == 0) return parse_synth_spec(cfg.input);
    return load_image(cfg.input);
}

int cmd_compress(const RunConfig& cfg) {
    cfg.validate();
    const GrayImage img = load_input(cfg);
    const fs::path dir = prepare_output_dir(cfg);
    const PipelineOptions opts = cfg.pipeline_options();

    auto csv = open_out(dir / "report.csv");
    csv << "qf,scheme,n_tcn,q_ones,s_state,s_bit,a_bit,b_e,br_bits,psnr_db,clamped_count\n";
    for (int qf : cfg.qfs) {
        const QfResult r = run_pipeline(img, qf, opts);
        for (Scheme s : cfg.schemes) {
            const BitRateReport rep = r.report(s, opts);
            csv << qf << "," << scheme_name(s) << "," << rep.n_tcn << "," << rep.q_ones << "," << rep.s_state << ","
                << rep.s_bit << "," << rep.a_bit << "," << rep.b_e << "," << rep.br << ","
                << format_double(r.psnr_db) << "," << rep.clamped_count << "\n";
        }
        save_pgm_p5(r.reconstruction, (dir / ("recon_qf" + std::to_string(qf) + ".pgm")).string());
    }
    write_run_json(cfg, dir / "run.json");
    std::cout << "compress: " << cfg.qfs.size() << " qf x " << cfg.schemes.size() << " scheme rows -> "
              << (dir / "report.csv").string() << "\n";
    return 0;
}

int cmd_rdc(const RunConfig& cfg) {
    cfg.validate();
    const GrayImage img = load_input(cfg);
    const fs::path dir = prepare_output_dir(cfg);
    const PipelineOptions opts = cfg.pipeline_options();

    auto csv = open_out(dir / "rdc.csv");
    auto dat = open_out(dir / "rdc.dat");
    csv << "scheme,qf,br_bits,psnr_db\n";
    long long min_br = -1, max_br = -1;
    bool first_scheme = true;
    for (Scheme s : cfg.schemes) {
        if (!first_scheme) dat << "\n";
        first_scheme = false;
        dat << "# scheme " << scheme_name(s) << " (br_bits psnr_db)\n";
        for (const RdPoint& p : rd_sweep(img, cfg.qfs, s, opts)) {
            csv << scheme_name(p.scheme) << "," << p.qf << "," << p.br_bits << "," << format_double(p.psnr_db)
                << "\n";
            dat << p.br_bits << " " << format_double(p.psnr_db) << "\n";
            if (min_br < 0 || p.br_bits < min_br) min_br = p.br_bits;
            if (p.br_bits > max_br) max_br = p.br_bits;
        }
    }
    std::cout << "rdc: " << cfg.schemes.size() * cfg.qfs.size() << " points, br range ["
              << display_bits(min_br, cfg.units) << ", " << display_bits(max_br, cfg.units) << "] -> "
              << (dir / "rdc.csv").string() << "\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    cfg.validate();
    if (!cfg.verify_circuits) throw ConfigError("verify requires verify_circuits=true");
    const GrayImage img = load_input(cfg);
    const fs::path dir = prepare_output_dir(cfg);
    const PipelineOptions opts = cfg.pipeline_options();

    const int qf = cfg.qfs.front();
    const QfResult r = run_pipeline(img, qf, opts);
    const RegisterLayout layout = RegisterLayout::for_block(cfg.quantum_block, cfg.quantum_block, cfg.value_qubits);

    auto csv = open_out(dir / "verify.csv");
    csv << "block_x,block_y,n_tcn,efrqi_fidelity,scmneqr_channel_fidelity,scmneqr_idealized_decode_exact,"
           "unrecoverable_positions\n";

    int attempted = 0, verified = 0, skipped = 0;
    for (const auto& block : r.blocks) {
        if (block.n_tcn() == 0) continue;
        if (attempted >= cfg.verify_block_limit) break;
        ++attempted;
        if (layout.total() > kMaxSimQubits) {
            std::cerr << "verify: skipping block (" << block.block_x << "," << block.block_y << "): "
                      << layout.total() << " qubits exceeds the " << kMaxSimQubits << "-qubit budget\n";
            ++skipped;
            continue;
        }

        const QuantumState target = expected_state(block, layout);
        const Circuit efrqi_circuit = build_efrqi_circuit(block, layout);
        const Circuit scmneqr_circuit = build_scmneqr_circuit(block, layout);
        if (cfg.dump_circuits) {
            const std::string stem = "block_" + std::to_string(block.block_x) + "_" + std::to_string(block.block_y);
            auto fe = open_out(dir / (stem + "_efrqi.gates"));
            dump_circuit(efrqi_circuit, fe);
            auto fs_ = open_out(dir / (stem + "_scmneqr.gates"));
            dump_circuit(scmneqr_circuit, fs_);
        }
        const double f_efrqi = fidelity(target, simulate(efrqi_circuit, SimMode::Unitary));
        const QuantumState channel = simulate(scmneqr_circuit, SimMode::Channel);
        const double f_channel = fidelity(target, channel);

        const DecodeResult dec = decode_block(channel, layout);
        bool exact = true;
        for (int y = 0; y < block.s_y && exact; ++y)
            for (int x = 0; x < block.s_x && exact; ++x) {
                const std::int32_t v = block.coeffs[static_cast<std::size_t>(y) * block.s_x + x];
                const std::uint32_t want = v == 0 ? 0u : encode_value(v, cfg.value_qubits).bits;
                const auto got = dec.at(x, y);
                exact = got.has_value() && *got == want;
            }

        csv << block.block_x << "," << block.block_y << "," << block.n_tcn() << "," << format_double(f_efrqi, 12)
            << "," << format_double(f_channel, 12) << "," << (exact ? "true" : "false") << ","
            << dec.branch_position_gaps << "\n";
        ++verified;
    }

    std::cout << "verify: " << verified << " block(s) verified, " << skipped << " skipped -> "
              << (dir / "verify.csv").string() << "\n";
    if (attempted > 0 && verified == 0) return 1;
    return 0;
}

}  // namespace qbc
