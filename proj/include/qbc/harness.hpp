#pragma once

#include <string>
#include <vector>

#include "qbc/accounting.hpp"
#include "qbc/pipeline.hpp"

namespace qbc {

/// Display unit for bit-rate columns in the summary line; stored values are
/// always bits.
enum class DisplayUnits { Bits, KB, MB };

struct RunConfig {
    std::string input;                       // file path or "synth:..." spec
    std::vector<int> qfs = {1, 2, 4, 8, 16, 32, 64};
    std::vector<Scheme> schemes = {Scheme::Scmneqr, Scheme::Efrqi};
    int value_qubits = 8;
    int quantum_block = 16;
    BlockAddressMode be_mode = BlockAddressMode::PerBlockAddress;
    std::string output_dir = ".";
    bool verify_circuits = false;
    int verify_block_limit = 4;
    bool dump_circuits = false;  // verify also writes per-block gate lists
    DisplayUnits units = DisplayUnits::Bits;

    void validate() const;
    PipelineOptions pipeline_options() const;
};

/// Merges a JSON config file into `cfg`. Keys mirror the field names.
void load_config_json(const std::string& path, RunConfig& cfg);

GrayImage load_input(const RunConfig& cfg);

/// Writes report.csv, recon_qf<k>.pgm per qf, and run.json. Returns 0.
int cmd_compress(const RunConfig& cfg);

/// Writes rdc.csv and rdc.dat. Returns 0.
int cmd_rdc(const RunConfig& cfg);

/// Simulates up to verify_block_limit non-empty blocks at the first qf and
/// writes verify.csv. Blocks over the qubit budget are skipped with a
/// recorded reason; returns nonzero only if every block was skipped.
int cmd_verify(const RunConfig& cfg);

}  // namespace qbc
