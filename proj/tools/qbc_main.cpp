#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbc/error.hpp"
#include "qbc/harness.hpp"

namespace {

void add_common_options(CLI::App* cmd, qbc::RunConfig& cfg, std::string& config_path, std::string& schemes,
                        std::string& be_mode, std::string& units) {
    cmd->add_option("-i,--input", cfg.input, "Image path (PGM/PNG) or synth spec, e.g. synth:checkerboard:8:512x512");
    cmd->add_option("--qf", cfg.qfs, "Quantization factors to run");
    cmd->add_option("--scheme", schemes, "Comma-separated schemes: SCMNEQR,EFRQI");
    cmd->add_option("-q,--value-qubits", cfg.value_qubits, "Value qubit count (1..12)");
    cmd->add_option("--block", cfg.quantum_block, "Quantum block size (power of two, 2..16)");
    cmd->add_option("--be-mode", be_mode, "Block-address accounting: per-block-address|fixed|per-coefficient");
    cmd->add_option("-o,--output", cfg.output_dir, "Output directory (default $QBC_OUTPUT_DIR or .)");
    cmd->add_option("--units", units, "Display units for summary lines: bits|KB|MB");
    cmd->add_option("--config", config_path, "JSON config file; explicit flags override it");
}

void apply_string_options(qbc::RunConfig& cfg, const std::string& schemes, const std::string& be_mode,
                          const std::string& units) {
    if (!schemes.empty()) {
        cfg.schemes.clear();
        std::size_t start = 0;
        while (start <= schemes.size()) {
            const auto comma = schemes.find(',', start);
            const auto part = schemes.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!part.empty()) cfg.schemes.push_back(qbc::parse_scheme(part));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (!be_mode.empty()) cfg.be_mode = qbc::parse_block_address_mode(be_mode);
    if (units == "bits")
        cfg.units = qbc::DisplayUnits::Bits;
    else if (units == "KB")
        cfg.units = qbc::DisplayUnits::KB;
    else if (units == "MB")
        cfg.units = qbc::DisplayUnits::MB;
    else if (!units.empty())
        throw qbc::ConfigError("unknown units: " + units);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Block-wise quantum grayscale image representation and compression (SCMNEQR)"};
    app.require_subcommand(1);

    qbc::RunConfig cfg;
    if (const char* env = std::getenv("QBC_OUTPUT_DIR")) cfg.output_dir = env;

    std::string config_path, schemes, be_mode, units;

    auto* compress = app.add_subcommand("compress", "Run the pipeline; write report.csv and reconstructions");
    add_common_options(compress, cfg, config_path, schemes, be_mode, units);

    auto* rdc = app.add_subcommand("rdc", "Sweep quantization factors; write rdc.csv and rdc.dat");
    add_common_options(rdc, cfg, config_path, schemes, be_mode, units);

    auto* verify = app.add_subcommand("verify", "Simulate block circuits against the analytic target state");
    add_common_options(verify, cfg, config_path, schemes, be_mode, units);
    verify->add_option("--verify-limit", cfg.verify_block_limit, "Max non-empty blocks to simulate");
    verify->add_flag("--dump-circuits", cfg.dump_circuits, "Also write plain-text gate lists per verified block");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            // Reload with the config as the base so explicit flags win.
            qbc::RunConfig base;
            if (const char* env = std::getenv("QBC_OUTPUT_DIR")) base.output_dir = env;
            qbc::load_config_json(config_path, base);
            auto take = [](const CLI::App* c, const char* name) { return c->count(name) > 0; };
            const CLI::App* active = app.get_subcommands().front();
            if (!take(active, "--input")) cfg.input = base.input;
            if (!take(active, "--qf")) cfg.qfs = base.qfs;
            if (!take(active, "--scheme")) cfg.schemes = base.schemes;
            if (!take(active, "--value-qubits")) cfg.value_qubits = base.value_qubits;
            if (!take(active, "--block")) cfg.quantum_block = base.quantum_block;
            if (!take(active, "--be-mode")) cfg.be_mode = base.be_mode;
            if (!take(active, "--output")) cfg.output_dir = base.output_dir;
            if (active->get_name() == "verify" && !take(active, "--verify-limit"))
                cfg.verify_block_limit = base.verify_block_limit;
        }
        apply_string_options(cfg, schemes, be_mode, units);

        if (compress->parsed()) return qbc::cmd_compress(cfg);
        if (rdc->parsed()) return qbc::cmd_rdc(cfg);
        if (verify->parsed()) {
            cfg.verify_circuits = true;
            return qbc::cmd_verify(cfg);
        }
    } catch (const qbc::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 2;
    } catch (const qbc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 3;
    } catch (const qbc::Error& e) {
        std::cerr << "pipeline error: " << e.what() << "\n";
        return 4;
    }
    return 1;
}
