#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "qbc/block.hpp"

namespace qbc {

enum class GateKind { PauliX, Hadamard, ControlledX, MultiControlledX, Reset };

struct Control {
    int qubit = 0;
    bool on_one = true;  // false = control fires on |0>
};

struct Gate {
    GateKind kind = GateKind::PauliX;
    int target = 0;
    std::vector<Control> controls;
};

struct Circuit {
    RegisterLayout layout;
    std::vector<Gate> gates;

    bool is_unitary() const;  // true iff no Reset gate
    int count(GateKind kind) const;
};

using Amplitudes = std::vector<std::complex<double>>;

/// Pure state or a weighted mixture of pure states (reset trajectories).
/// Basis index bit i corresponds to qubit i of the RegisterLayout.
struct QuantumState {
    struct Branch {
        double weight = 1.0;
        Amplitudes amps;
    };
    std::vector<Branch> branches;

    bool is_pure() const { return branches.size() == 1; }

    static QuantumState pure(Amplitudes amps);
};

/// Analytic target: sum over positions of |magnitude bits>|Y>|X>|0>_aux with
/// amplitude 1/sqrt(S_X * S_Y); zero coefficients carry the all-zero value
/// register on their position branch.
QuantumState expected_state(const QuantumBlock& block, const RegisterLayout& layout);

/// Hadamards on all position qubits, then per non-zero coefficient one
/// multi-controlled X onto the auxiliary, CXs from the auxiliary onto the set
/// magnitude bits, and a Reset of the auxiliary.
Circuit build_scmneqr_circuit(const QuantumBlock& block, const RegisterLayout& layout);

/// Same structure with each Reset replaced by a second identical
/// multi-controlled X (uncompute); fully unitary.
Circuit build_efrqi_circuit(const QuantumBlock& block, const RegisterLayout& layout);

enum class SimMode { Unitary, Channel };

inline constexpr int kMaxSimQubits = 22;

/// Unitary mode: statevector evolution, rejects Reset gates. Channel mode:
/// each Reset is the measure-and-reinitialize channel, enumerated as a
/// deterministic weighted branch mixture (no sampling).
QuantumState simulate(const Circuit& circuit, SimMode mode);

/// Pure a vs pure or mixed b: |<a|b>|^2, weighted over branches of b.
double fidelity(const QuantumState& a, const QuantumState& b);

struct DecodeResult {
    int s_x = 0;
    int s_y = 0;
    // Magnitude per position; nullopt = position absent from every branch.
    std::vector<std::optional<std::uint32_t>> magnitudes;
    int unrecoverable = 0;           // positions absent from every branch
    long long branch_position_gaps = 0;  // sum over branches of positions that branch lacks

    std::optional<std::uint32_t> at(int x, int y) const { return magnitudes[static_cast<std::size_t>(y) * s_x + x]; }
};

/// Basis readout of an Eq.-6-form state (or mixture). Throws SimError when
/// two distinct value patterns share one position.
DecodeResult decode_block(const QuantumState& state, const RegisterLayout& layout);

/// Plain-text gate list, one gate per line, versioned header.
void dump_circuit(const Circuit& circuit, std::ostream& out);

}  // namespace qbc
