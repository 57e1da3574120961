#ifndef LATSURG_CIRCUIT_HPP
#define LATSURG_CIRCUIT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latsurg {

enum class GateKind : std::uint8_t { H, S, SDag, T, TDag, X, Z, CNOT, RZ };

// Mnemonic used by the text format ("SDG", "TDG", ...).
std::string_view gate_mnemonic(GateKind kind);
std::optional<GateKind> gate_from_mnemonic(std::string_view text);

constexpr std::size_t gate_arity(GateKind kind) { return kind == GateKind::CNOT ? 2 : 1; }

struct Gate {
    GateKind kind{GateKind::H};
    std::vector<std::size_t> qubits;
    std::optional<double> angle;  // radians, RZ only

    static Gate single(GateKind kind, std::size_t qubit);
    static Gate cnot(std::size_t control, std::size_t target);
    static Gate rz(std::size_t qubit, double angle);

    bool operator==(const Gate&) const = default;
};

struct Circuit {
    std::size_t num_qubits{0};
    std::vector<Gate> gates;

    // Throws CircuitError if any gate breaks the operand or angle invariants.
    void validate() const;
    std::size_t count(GateKind kind) const;

    bool operator==(const Circuit&) const = default;
};

class CircuitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public CircuitError {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Line format: a `qubits <n>` header followed by one gate per line. `#` starts
// a comment and blank lines are skipped.
Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit& circuit);

// Draws round-half-up(t_fraction * num_gates) T gates at uniformly chosen
// positions; every other gate is uniform over {H, S, X, Z, CNOT} (CNOT is
// dropped from the pool when there is a single qubit). Randomness comes from
// std::mt19937_64 and an unbiased modulo-rejection draw, so identical
// arguments give identical circuits on every conforming standard library.
Circuit generate_random_circuit(std::size_t num_qubits, std::size_t num_gates, double t_fraction,
                                std::uint64_t seed);

}  // namespace latsurg

#endif  // LATSURG_CIRCUIT_HPP
