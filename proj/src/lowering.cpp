#include "latsurg/lowering.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace latsurg {

namespace {

class Emitter {
public:
    std::size_t push(SurgeryOp op) {
        ops_.push_back(std::move(op));
        return ops_.size() - 1;
    }

    void cnot(std::size_t control, std::size_t target) {
        const auto a = PatchId::ancilla(ancillas_++);
        push(SurgeryOp::on(SurgeryOpKind::InitAncillaPlus, a));
        const auto m_zz = push(SurgeryOp::measure(SurgeryOpKind::MeasureZZ, PatchId::data(control), a));
        const auto m_xx = push(SurgeryOp::measure(SurgeryOpKind::MeasureXX, a, PatchId::data(target)));
        const auto m_z = push(SurgeryOp::on(SurgeryOpKind::MeasurePatchZ, a));
        push(SurgeryOp::conditional_pauli(PatchId::data(control), Pauli::Z, {{m_xx}, false}));
        push(SurgeryOp::conditional_pauli(PatchId::data(target), Pauli::X, {{m_zz, m_z}, false}));
    }

    // The ZZ outcome selects T (0) or T^dag (1); an S fixes the wrong one.
    void t_gate(std::size_t qubit, bool adjoint) {
        const auto q = PatchId::data(qubit);
        const auto m = PatchId::magic(magic_++);
        push(SurgeryOp::on(SurgeryOpKind::RequestMagicState, m));
        const auto m_zz = push(SurgeryOp::measure(SurgeryOpKind::MeasureZZ, q, m));
        const auto m_x = push(SurgeryOp::on(SurgeryOpKind::MeasurePatchX, m));
        if (!adjoint) {
            push(SurgeryOp::conditional_s(q, {{m_zz}, false}));
            push(SurgeryOp::conditional_pauli(q, Pauli::Z, {{m_x}, false}));
        } else {
            // S^dag = S Z up to phase.
            push(SurgeryOp::conditional_s(q, {{m_zz}, true}));
            push(SurgeryOp::conditional_pauli(q, Pauli::Z, {{m_zz, m_x}, true}));
        }
    }

    void single(GateKind kind, std::size_t qubit) {
        const auto q = PatchId::data(qubit);
        switch (kind) {
            case GateKind::H: push(SurgeryOp::on(SurgeryOpKind::DirectH, q)); break;
            case GateKind::S: push(SurgeryOp::on(SurgeryOpKind::DirectS, q)); break;
            case GateKind::SDag:
                push(SurgeryOp::on(SurgeryOpKind::DirectS, q));
                push(SurgeryOp::on(SurgeryOpKind::TrackPauliZ, q));
                break;
            case GateKind::X: push(SurgeryOp::on(SurgeryOpKind::TrackPauliX, q)); break;
            case GateKind::Z: push(SurgeryOp::on(SurgeryOpKind::TrackPauliZ, q)); break;
            case GateKind::T: t_gate(qubit, false); break;
            case GateKind::TDag: t_gate(qubit, true); break;
            default: throw CircuitError("not a single-qubit Clifford+T gate: " + std::string(gate_mnemonic(kind)));
        }
    }

    std::vector<SurgeryOp>& ops() { return ops_; }
    std::size_t ancillas() const { return ancillas_; }
    std::size_t magic_states() const { return magic_; }

private:
    std::vector<SurgeryOp> ops_;
    std::size_t ancillas_{0};
    std::size_t magic_{0};
};

// Emits one Clifford+T gate under the current frame and updates the frame.
void lower_framed(Emitter& emitter, PauliFrame& frame, GateKind kind, std::span<const std::size_t> qubits) {
    auto& f = frame.bits[qubits[0]];
    switch (kind) {
        case GateKind::X: f.x = !f.x; break;
        case GateKind::Z: f.z = !f.z; break;
        case GateKind::H:
            emitter.single(GateKind::H, qubits[0]);
            std::swap(f.x, f.z);
            break;
        case GateKind::S:
            emitter.single(GateKind::S, qubits[0]);
            f.z = f.z != f.x;
            break;
        case GateKind::SDag:
            emitter.push(SurgeryOp::on(SurgeryOpKind::DirectS, PatchId::data(qubits[0])));
            f.z = f.z != f.x;
            f.z = !f.z;
            break;
        // T X = X T^dag up to phase, so a pending X swaps T and T^dag.
        case GateKind::T: emitter.t_gate(qubits[0], f.x); break;
        case GateKind::TDag: emitter.t_gate(qubits[0], !f.x); break;
        case GateKind::CNOT: {
            emitter.cnot(qubits[0], qubits[1]);
            auto& c = frame.bits[qubits[0]];
            auto& t = frame.bits[qubits[1]];
            t.x = t.x != c.x;
            c.z = c.z != t.z;
            break;
        }
        default: throw CircuitError("unexpected gate in framed lowering");
    }
}

}  // namespace

SurgeryOp SurgeryOp::on(SurgeryOpKind kind, PatchId patch) {
    SurgeryOp op;
    op.kind = kind;
    op.first = patch;
    return op;
}

SurgeryOp SurgeryOp::measure(SurgeryOpKind kind, PatchId a, PatchId b) {
    SurgeryOp op;
    op.kind = kind;
    op.first = a;
    op.second = b;
    return op;
}

SurgeryOp SurgeryOp::conditional_s(PatchId patch, Condition condition) {
    SurgeryOp op;
    op.kind = SurgeryOpKind::ConditionalS;
    op.first = patch;
    op.condition = std::move(condition);
    return op;
}

SurgeryOp SurgeryOp::conditional_pauli(PatchId patch, Pauli pauli, Condition condition) {
    SurgeryOp op;
    op.kind = SurgeryOpKind::ConditionalPauli;
    op.first = patch;
    op.pauli = pauli;
    op.condition = std::move(condition);
    return op;
}

std::string to_string(SurgeryOpKind kind) {
    switch (kind) {
        case SurgeryOpKind::InitAncillaPlus: return "InitAncillaPlus";
        case SurgeryOpKind::InitAncillaZero: return "InitAncillaZero";
        case SurgeryOpKind::MeasureZZ: return "MeasureZZ";
        case SurgeryOpKind::MeasureXX: return "MeasureXX";
        case SurgeryOpKind::MeasurePatchZ: return "MeasurePatchZ";
        case SurgeryOpKind::MeasurePatchX: return "MeasurePatchX";
        case SurgeryOpKind::DirectH: return "DirectH";
        case SurgeryOpKind::DirectS: return "DirectS";
        case SurgeryOpKind::RequestMagicState: return "RequestMagicState";
        case SurgeryOpKind::RotatePatch: return "RotatePatch";
        case SurgeryOpKind::TrackPauliX: return "TrackPauliX";
        case SurgeryOpKind::TrackPauliZ: return "TrackPauliZ";
        case SurgeryOpKind::ConditionalS: return "ConditionalS";
        case SurgeryOpKind::ConditionalPauli: return "ConditionalPauli";
    }
    return "?";
}

namespace {

std::string patch_name(PatchId p) {
    const char prefix = p.role == PatchRole::Data ? 'q' : p.role == PatchRole::Ancilla ? 'a' : 'm';
    return prefix + std::to_string(p.index);
}

}  // namespace

std::string to_string(const SurgeryOp& op) {
    std::string out = to_string(op.kind) + "(" + patch_name(op.first);
    if (op.is_two_patch_measurement())
        out += ", " + patch_name(op.second);
    if (op.kind == SurgeryOpKind::ConditionalPauli)
        out += op.pauli == Pauli::X ? ", X" : ", Z";
    if (op.kind == SurgeryOpKind::ConditionalS || op.kind == SurgeryOpKind::ConditionalPauli) {
        out += op.condition.negated ? ", !" : ", ";
        for (std::size_t i = 0; i < op.condition.sources.size(); ++i)
            out += (i ? "^m" : "m") + std::to_string(op.condition.sources[i]);
    }
    return out + ")";
}

std::vector<SurgeryOp> lower_cnot(std::size_t control, std::size_t target) {
    if (control == target)
        throw CircuitError("lower_cnot: control and target must differ");
    Emitter emitter;
    emitter.cnot(control, target);
    return std::move(emitter.ops());
}

std::vector<SurgeryOp> lower_t(std::size_t qubit, bool adjoint) {
    Emitter emitter;
    emitter.t_gate(qubit, adjoint);
    return std::move(emitter.ops());
}

std::vector<GateKind> expand_rotation(double angle, const LoweringOptions& options) {
    constexpr double eighth = std::numbers::pi / 4;
    const double steps = std::round(angle / eighth);
    if (std::abs(angle - steps * eighth) < 1e-12) {
        const auto k = ((static_cast<long long>(steps) % 8) + 8) % 8;
        switch (k) {
            case 0: return {};
            case 1: return {GateKind::T};
            case 2: return {GateKind::S};
            case 3: return {GateKind::S, GateKind::T};
            case 4: return {GateKind::Z};
            case 5: return {GateKind::Z, GateKind::T};
            case 6: return {GateKind::SDag};
            default: return {GateKind::TDag};
        }
    }
    const auto seq = sk::solovay_kitaev(sk::rz(angle), options.sk_depth, options.sk_base_length);
    return sk::fuse_t_pairs(seq.gates);
}

std::vector<SurgeryOp> lower_gate(const Gate& gate, const LoweringOptions& options) {
    Emitter emitter;
    switch (gate.kind) {
        case GateKind::CNOT:
            if (gate.qubits.size() != 2 || gate.qubits[0] == gate.qubits[1])
                throw CircuitError("lower_gate: CNOT needs two distinct qubits");
            emitter.cnot(gate.qubits[0], gate.qubits[1]);
            break;
        case GateKind::RZ:
            if (!gate.angle)
                throw CircuitError("lower_gate: RZ without angle");
            for (const auto kind : expand_rotation(*gate.angle, options))
                emitter.single(kind, gate.qubits.at(0));
            break;
        default: emitter.single(gate.kind, gate.qubits.at(0)); break;
    }
    return std::move(emitter.ops());
}

LoweredProgram lower_circuit(const Circuit& circuit, const LoweringOptions& options) {
    circuit.validate();
    Emitter emitter;
    PauliFrame frame(circuit.num_qubits);
    for (const auto& gate : circuit.gates) {
        if (gate.kind == GateKind::RZ) {
            for (const auto kind : expand_rotation(*gate.angle, options))
                lower_framed(emitter, frame, kind, gate.qubits);
        } else {
            lower_framed(emitter, frame, gate.kind, gate.qubits);
        }
    }
    LoweredProgram program;
    program.num_qubits = circuit.num_qubits;
    program.ops = std::move(emitter.ops());
    program.frame = std::move(frame);
    program.magic_states = emitter.magic_states();
    program.ancillas = emitter.ancillas();
    return program;
}

}  // namespace latsurg
