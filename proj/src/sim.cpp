#include "qbc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

#include "qbc/error.hpp"

namespace qbc {

namespace {

constexpr double kProbEps = 1e-14;   // branch probabilities below this are dropped
constexpr double kAmpEps2 = 1e-12;   // |amp|^2 threshold for basis readout
constexpr std::size_t kMaxBranches = 4096;

std::uint64_t control_mask(const std::vector<Control>& controls) {
    std::uint64_t m = 0;
    for (const auto& c : controls) m |= 1ull << c.qubit;
    return m;
}

std::uint64_t control_value(const std::vector<Control>& controls) {
    std::uint64_t v = 0;
    for (const auto& c : controls)
        if (c.on_one) v |= 1ull << c.qubit;
    return v;
}

void apply_x_like(const Gate& g, Amplitudes& amps) {
    const std::uint64_t tbit = 1ull << g.target;
    const std::uint64_t cmask = control_mask(g.controls);
    const std::uint64_t cval = control_value(g.controls);
    const std::uint64_t n = amps.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        if ((i & tbit) != 0) continue;
        if ((i & cmask) != cval) continue;
        std::swap(amps[i], amps[i | tbit]);
    }
}

void apply_hadamard(int target, Amplitudes& amps) {
    static const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
    const std::uint64_t tbit = 1ull << target;
    const std::uint64_t n = amps.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        if ((i & tbit) != 0) continue;
        const auto a = amps[i];
        const auto b = amps[i | tbit];
        amps[i] = (a + b) * kInvSqrt2;
        amps[i | tbit] = (a - b) * kInvSqrt2;
    }
}

void renormalize(Amplitudes& amps, double norm2) {
    const double s = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= s;
}

// Measure-and-reinitialize channel on one qubit of one branch. Appends the
// surviving outcomes (reset qubit forced to |0>) to `out`.
void apply_reset(const QuantumState::Branch& br, int target, std::vector<QuantumState::Branch>& out) {
    const std::uint64_t tbit = 1ull << target;
    const std::uint64_t n = br.amps.size();

    double p1 = 0.0;
    for (std::uint64_t i = 0; i < n; ++i)
        if (i & tbit) p1 += std::norm(br.amps[i]);
    const double p0 = 1.0 - p1;

    if (p0 > kProbEps) {
        QuantumState::Branch b0;
        b0.weight = br.weight * p0;
        b0.amps.assign(n, {});
        for (std::uint64_t i = 0; i < n; ++i)
            if (!(i & tbit)) b0.amps[i] = br.amps[i];
        renormalize(b0.amps, p0);
        out.push_back(std::move(b0));
    }
    if (p1 > kProbEps) {
        QuantumState::Branch b1;
        b1.weight = br.weight * p1;
        b1.amps.assign(n, {});
        for (std::uint64_t i = 0; i < n; ++i)
            if (i & tbit) b1.amps[i & ~tbit] = br.amps[i];  // outcome 1, then reinitialize to |0>
        renormalize(b1.amps, p1);
        out.push_back(std::move(b1));
    }
}

void check_gate(const Gate& g, const RegisterLayout& layout) {
    const int total = layout.total();
    if (g.target < 0 || g.target >= total) throw SimError("gate target out of range");
    for (const auto& c : g.controls) {
        if (c.qubit < 0 || c.qubit >= total) throw SimError("gate control out of range");
        if (c.qubit == g.target) throw SimError("gate target may not also be a control");
    }
    if (g.kind == GateKind::Reset && !g.controls.empty()) throw SimError("reset takes no controls");
}

// Common structure of the SCMNEQR / EFRQI preparation circuits.
Circuit build_preparation(const QuantumBlock& block, const RegisterLayout& layout, bool reset_variant) {
    if (block.s_x != layout.s_x() || block.s_y != layout.s_y()) throw DimensionError("block does not match layout");

    Circuit c;
    c.layout = layout;
    for (int i = 0; i < layout.pos_y_qubits; ++i) c.gates.push_back({GateKind::Hadamard, layout.y_qubit(i), {}});
    for (int i = 0; i < layout.pos_x_qubits; ++i) c.gates.push_back({GateKind::Hadamard, layout.x_qubit(i), {}});

    for (const auto& nz : block.nonzeros) {
        if (nz.x < 0 || nz.x >= block.s_x || nz.y < 0 || nz.y >= block.s_y)
            throw DimensionError("coefficient position outside block");

        Gate connect{GateKind::MultiControlledX, layout.aux_qubit(), {}};
        for (int i = 0; i < layout.pos_y_qubits; ++i)
            connect.controls.push_back({layout.y_qubit(i), ((nz.y >> i) & 1) != 0});
        for (int i = 0; i < layout.pos_x_qubits; ++i)
            connect.controls.push_back({layout.x_qubit(i), ((nz.x >> i) & 1) != 0});
        c.gates.push_back(connect);

        for (int i = 0; i < layout.value_qubits; ++i)
            if ((nz.enc.bits >> i) & 1)
                c.gates.push_back({GateKind::ControlledX, i, {{layout.aux_qubit(), true}}});

        if (reset_variant)
            c.gates.push_back({GateKind::Reset, layout.aux_qubit(), {}});
        else
            c.gates.push_back(connect);  // uncompute with the same gate
    }
    return c;
}

std::uint64_t basis_index(std::uint32_t mag, int y, int x, const RegisterLayout& layout) {
    return static_cast<std::uint64_t>(mag) | (static_cast<std::uint64_t>(y) << layout.value_qubits) |
           (static_cast<std::uint64_t>(x) << (layout.value_qubits + layout.pos_y_qubits));
}

}  // namespace

bool Circuit::is_unitary() const {
    return std::none_of(gates.begin(), gates.end(), [](const Gate& g) { return g.kind == GateKind::Reset; });
}

int Circuit::count(GateKind kind) const {
    return static_cast<int>(std::count_if(gates.begin(), gates.end(), [&](const Gate& g) { return g.kind == kind; }));
}

QuantumState QuantumState::pure(Amplitudes amps) {
    QuantumState s;
    s.branches.push_back({1.0, std::move(amps)});
    return s;
}

QuantumState expected_state(const QuantumBlock& block, const RegisterLayout& layout) {
    if (block.s_x != layout.s_x() || block.s_y != layout.s_y()) throw DimensionError("block does not match layout");
    if (layout.total() > kMaxSimQubits) throw SimError("qubit budget exceeded");

    Amplitudes amps(1ull << layout.total());
    const double amp = 1.0 / std::sqrt(static_cast<double>(block.s_x) * block.s_y);
    for (int y = 0; y < block.s_y; ++y)
        for (int x = 0; x < block.s_x; ++x) {
            const std::int32_t v = block.coeffs[static_cast<std::size_t>(y) * block.s_x + x];
            const std::uint32_t mag = v == 0 ? 0u : encode_value(v, layout.value_qubits).bits;
            amps[basis_index(mag, y, x, layout)] = amp;
        }
    return QuantumState::pure(std::move(amps));
}

Circuit build_scmneqr_circuit(const QuantumBlock& block, const RegisterLayout& layout) {
    return build_preparation(block, layout, true);
}

Circuit build_efrqi_circuit(const QuantumBlock& block, const RegisterLayout& layout) {
    return build_preparation(block, layout, false);
}

QuantumState simulate(const Circuit& circuit, SimMode mode) {
    const int total = circuit.layout.total();
    if (total > kMaxSimQubits) throw SimError("qubit budget exceeded");
    if (mode == SimMode::Unitary && !circuit.is_unitary())
        throw SimError("reset gate requires channel mode");

    Amplitudes init(1ull << total);
    init[0] = 1.0;
    QuantumState state = QuantumState::pure(std::move(init));

    for (const auto& g : circuit.gates) {
        check_gate(g, circuit.layout);
        switch (g.kind) {
            case GateKind::Hadamard:
                if (!g.controls.empty()) throw SimError("controlled Hadamard not supported");
                for (auto& br : state.branches) apply_hadamard(g.target, br.amps);
                break;
            case GateKind::PauliX:
            case GateKind::ControlledX:
            case GateKind::MultiControlledX:
                for (auto& br : state.branches) apply_x_like(g, br.amps);
                break;
            case GateKind::Reset: {
                std::vector<QuantumState::Branch> next;
                next.reserve(state.branches.size() + 1);
                for (auto& br : state.branches) apply_reset(br, g.target, next);
                if (next.size() > kMaxBranches) throw SimError("reset branch budget exceeded");
                state.branches = std::move(next);
                break;
            }
        }
    }
    return state;
}

double fidelity(const QuantumState& a, const QuantumState& b) {
    if (!a.is_pure()) throw SimError("fidelity reference state must be pure");
    const Amplitudes& ref = a.branches.front().amps;
    double f = 0.0;
    for (const auto& br : b.branches) {
        if (br.amps.size() != ref.size()) throw SimError("state dimension mismatch");
        std::complex<double> ov = 0.0;
        for (std::size_t i = 0; i < ref.size(); ++i) ov += std::conj(ref[i]) * br.amps[i];
        f += br.weight * std::norm(ov);
    }
    return f;
}

DecodeResult decode_block(const QuantumState& state, const RegisterLayout& layout) {
    DecodeResult r;
    r.s_x = layout.s_x();
    r.s_y = layout.s_y();
    const std::size_t positions = static_cast<std::size_t>(r.s_x) * r.s_y;
    r.magnitudes.assign(positions, std::nullopt);

    const std::uint64_t vmask = (1ull << layout.value_qubits) - 1;
    for (const auto& br : state.branches) {
        if (br.amps.size() != (1ull << layout.total())) throw SimError("state dimension mismatch");
        std::vector<bool> covered(positions, false);
        for (std::uint64_t i = 0; i < br.amps.size(); ++i) {
            if (std::norm(br.amps[i]) <= kAmpEps2) continue;
            const auto mag = static_cast<std::uint32_t>(i & vmask);
            const int y = static_cast<int>((i >> layout.value_qubits) & ((1u << layout.pos_y_qubits) - 1));
            const int x = static_cast<int>((i >> (layout.value_qubits + layout.pos_y_qubits)) &
                                           ((1u << layout.pos_x_qubits) - 1));
            const std::size_t p = static_cast<std::size_t>(y) * r.s_x + x;
            if (r.magnitudes[p] && *r.magnitudes[p] != mag)
                throw SimError("ambiguous readout: two value patterns on one position");
            r.magnitudes[p] = mag;
            covered[p] = true;
        }
        for (std::size_t p = 0; p < positions; ++p)
            if (!covered[p]) ++r.branch_position_gaps;
    }
    for (const auto& m : r.magnitudes)
        if (!m) ++r.unrecoverable;
    return r;
}

void dump_circuit(const Circuit& circuit, std::ostream& out) {
    out << "qbc-gates v1 qubits=" << circuit.layout.total() << "\n";
    for (const auto& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::PauliX: out << "x"; break;
            case GateKind::Hadamard: out << "h"; break;
            case GateKind::ControlledX: out << "cx"; break;
            case GateKind::MultiControlledX: out << "mcx"; break;
            case GateKind::Reset: out << "reset"; break;
        }
        out << " " << g.target;
        for (const auto& c : g.controls) out << " " << (c.on_one ? '+' : '-') << c.qubit;
        out << "\n";
    }
}

}  // namespace qbc
