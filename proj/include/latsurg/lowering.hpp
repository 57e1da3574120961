#ifndef LATSURG_LOWERING_HPP
#define LATSURG_LOWERING_HPP

#include "latsurg/circuit.hpp"
#include "latsurg/sk.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace latsurg {

enum class PatchRole : std::uint8_t { Data, Ancilla, Magic };

// Data patches are indexed by logical qubit; ancilla and magic patches by
// allocation order within one program.
struct PatchId {
    PatchRole role{PatchRole::Data};
    std::uint32_t index{0};

    static PatchId data(std::size_t qubit) { return {PatchRole::Data, static_cast<std::uint32_t>(qubit)}; }
    static PatchId ancilla(std::size_t i) { return {PatchRole::Ancilla, static_cast<std::uint32_t>(i)}; }
    static PatchId magic(std::size_t i) { return {PatchRole::Magic, static_cast<std::uint32_t>(i)}; }

    auto operator<=>(const PatchId&) const = default;
};

enum class SurgeryOpKind : std::uint8_t {
    InitAncillaPlus,
    InitAncillaZero,
    MeasureZZ,
    MeasureXX,
    MeasurePatchZ,
    MeasurePatchX,
    DirectH,
    DirectS,
    RequestMagicState,
    RotatePatch,
    TrackPauliX,
    TrackPauliZ,
    ConditionalS,
    ConditionalPauli,
};

enum class Pauli : std::uint8_t { X, Z };

// Fires when the XOR of the listed measurement outcomes (0 for the +1
// eigenvalue, 1 for -1), flipped when `negated`, is 1. Sources are indices of
// earlier instructions in the same stream.
struct Condition {
    std::vector<std::size_t> sources;
    bool negated{false};

    bool operator==(const Condition&) const = default;
};

struct SurgeryOp {
    SurgeryOpKind kind{SurgeryOpKind::DirectH};
    PatchId first;
    PatchId second;  // MeasureZZ / MeasureXX only
    Pauli pauli{Pauli::X};  // ConditionalPauli only
    Condition condition;    // ConditionalS / ConditionalPauli only

    static SurgeryOp on(SurgeryOpKind kind, PatchId patch);
    static SurgeryOp measure(SurgeryOpKind kind, PatchId a, PatchId b);
    static SurgeryOp conditional_s(PatchId patch, Condition condition);
    static SurgeryOp conditional_pauli(PatchId patch, Pauli pauli, Condition condition);

    bool is_two_patch_measurement() const {
        return kind == SurgeryOpKind::MeasureZZ || kind == SurgeryOpKind::MeasureXX;
    }
    bool is_measurement() const {
        return is_two_patch_measurement() || kind == SurgeryOpKind::MeasurePatchZ ||
               kind == SurgeryOpKind::MeasurePatchX;
    }

    bool operator==(const SurgeryOp&) const = default;
};

std::string to_string(SurgeryOpKind kind);
std::string to_string(const SurgeryOp& op);

struct PauliBits {
    bool x{false};
    bool z{false};
    bool operator==(const PauliBits&) const = default;
};

// Compile-time Pauli frame: the physical state equals (prod_q X^x Z^z) times
// the ideal state.
struct PauliFrame {
    std::vector<PauliBits> bits;

    explicit PauliFrame(std::size_t num_qubits = 0) : bits(num_qubits) {}
    bool operator==(const PauliFrame&) const = default;
};

struct LoweredProgram {
    std::size_t num_qubits{0};
    std::vector<SurgeryOp> ops;
    PauliFrame frame;
    std::size_t magic_states{0};
    std::size_t ancillas{0};
};

struct LoweringOptions {
    std::size_t sk_depth{sk::kDefaultDepth};
    std::size_t sk_base_length{sk::kDefaultBaseLength};
};

// Ancilla-mediated CNOT: InitAncillaPlus(a); MeasureZZ(c, a); MeasureXX(a, t);
// MeasurePatchZ(a); Z on c if m(XX); X on t if m(ZZ) xor m(Z). The ancilla
// is PatchId::ancilla(0) and condition sources index into the returned list.
std::vector<SurgeryOp> lower_cnot(std::size_t control, std::size_t target);

// Teleported T (or T^dag) consuming one magic state T|+>.
std::vector<SurgeryOp> lower_t(std::size_t qubit, bool adjoint = false);

// Frame-free lowering of one gate. X and Z become TrackPauli instructions.
std::vector<SurgeryOp> lower_gate(const Gate& gate, const LoweringOptions& options = {});

// Clifford+T word for RZ(angle). Multiples of pi/4 (within 1e-12) are exact;
// other angles go through Solovay-Kitaev with T·T fused into S.
std::vector<GateKind> expand_rotation(double angle, const LoweringOptions& options = {});

// Lowers a whole circuit, folding Pauli gates into the compile-time frame and
// propagating it through the following gates. The result contains no
// TrackPauli instructions.
LoweredProgram lower_circuit(const Circuit& circuit, const LoweringOptions& options = {});

}  // namespace latsurg

#endif  // LATSURG_LOWERING_HPP
