#include "latsurg/circuit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

namespace latsurg {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 9> kMnemonics{{
    {GateKind::H, "H"},
    {GateKind::S, "S"},
    {GateKind::SDag, "SDG"},
    {GateKind::T, "T"},
    {GateKind::TDag, "TDG"},
    {GateKind::X, "X"},
    {GateKind::Z, "Z"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::RZ, "RZ"},
}};

bool angle_in_range(double angle) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    return std::isfinite(angle) && angle > -two_pi && angle <= two_pi;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const auto start = line.find_first_not_of(" \t", pos);
        if (start == std::string_view::npos)
            break;
        const auto end = line.find_first_of(" \t", start);
        tokens.push_back(line.substr(start, end == std::string_view::npos ? end : end - start));
        pos = end == std::string_view::npos ? line.size() : end;
    }
    return tokens;
}

std::size_t parse_index(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    return value;
}

double parse_angle(std::string_view token, std::size_t line) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "expected a decimal angle, got '" + std::string(token) + "'");
    return value;
}

void check_gate(const Gate& gate, std::size_t num_qubits) {
    const auto arity = gate_arity(gate.kind);
    if (gate.qubits.size() != arity)
        throw CircuitError(std::string(gate_mnemonic(gate.kind)) + " takes " + std::to_string(arity) +
                           " qubit operand(s)");
    for (const auto q : gate.qubits) {
        if (q >= num_qubits)
            throw CircuitError("qubit index " + std::to_string(q) + " out of range for " +
                               std::to_string(num_qubits) + " qubits");
    }
    if (arity == 2 && gate.qubits[0] == gate.qubits[1])
        throw CircuitError("duplicate qubit operands in CNOT");
    if (gate.kind == GateKind::RZ) {
        if (!gate.angle || !angle_in_range(*gate.angle))
            throw CircuitError("RZ angle must lie in (-2pi, 2pi]");
    } else if (gate.angle) {
        throw CircuitError(std::string(gate_mnemonic(gate.kind)) + " carries no angle");
    }
}

// Unbiased draw from [0, bound): reject the low (2^64 mod bound) outputs, then
// reduce modulo bound.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold)
            return r % bound;
    }
}

}  // namespace

std::string_view gate_mnemonic(GateKind kind) {
    for (const auto& [k, name] : kMnemonics) {
        if (k == kind)
            return name;
    }
    return "?";
}

std::optional<GateKind> gate_from_mnemonic(std::string_view text) {
    for (const auto& [k, name] : kMnemonics) {
        if (name == text)
            return k;
    }
    return std::nullopt;
}

Gate Gate::single(GateKind kind, std::size_t qubit) { return Gate{kind, {qubit}, std::nullopt}; }

Gate Gate::cnot(std::size_t control, std::size_t target) {
    return Gate{GateKind::CNOT, {control, target}, std::nullopt};
}

Gate Gate::rz(std::size_t qubit, double angle) { return Gate{GateKind::RZ, {qubit}, angle}; }

void Circuit::validate() const {
    for (const auto& gate : gates)
        check_gate(gate, num_qubits);
}

std::size_t Circuit::count(GateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(gates.begin(), gates.end(), [kind](const Gate& g) { return g.kind == kind; }));
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : CircuitError("line " + std::to_string(line) + ": " + what), line_(line) {}

Circuit parse_circuit(std::string_view text) {
    Circuit circuit;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto tokens = split_tokens(line);
        if (tokens.front() == "qubits") {
            if (have_header)
                throw ParseError(line_no, "duplicate 'qubits' header");
            if (tokens.size() != 2)
                throw ParseError(line_no, "header must be 'qubits <n>'");
            circuit.num_qubits = parse_index(tokens[1], line_no);
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError(line_no, "missing 'qubits <n>' header before first gate");

        const auto kind = gate_from_mnemonic(tokens.front());
        if (!kind)
            throw ParseError(line_no, "unknown gate '" + std::string(tokens.front()) + "'");

        const std::size_t expected = gate_arity(*kind) + (*kind == GateKind::RZ ? 1 : 0);
        if (tokens.size() != expected + 1)
            throw ParseError(line_no, std::string(tokens.front()) + " expects " + std::to_string(expected) +
                                          " operand(s)");

        Gate gate{*kind, {}, std::nullopt};
        for (std::size_t i = 0; i < gate_arity(*kind); ++i)
            gate.qubits.push_back(parse_index(tokens[1 + i], line_no));
        if (*kind == GateKind::RZ)
            gate.angle = parse_angle(tokens[2], line_no);

        try {
            check_gate(gate, circuit.num_qubits);
        } catch (const CircuitError& e) {
            throw ParseError(line_no, e.what());
        }
        circuit.gates.push_back(std::move(gate));
    }
    if (!have_header)
        throw ParseError(line_no, "missing 'qubits <n>' header");
    return circuit;
}

std::string serialize_circuit(const Circuit& circuit) {
    std::string out = "qubits " + std::to_string(circuit.num_qubits) + "\n";
    for (const auto& gate : circuit.gates) {
        out += gate_mnemonic(gate.kind);
        for (const auto q : gate.qubits) {
            out += ' ';
            out += std::to_string(q);
        }
        if (gate.angle) {
            // Shortest representation that parses back to the same double.
            std::array<char, 32> buf{};
            const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), *gate.angle);
            out += ' ';
            out.append(buf.data(), ptr);
        }
        out += '\n';
    }
    return out;
}

Circuit generate_random_circuit(std::size_t num_qubits, std::size_t num_gates, double t_fraction,
                                std::uint64_t seed) {
    if (num_qubits == 0)
        throw CircuitError("random circuit needs at least one qubit");
    if (!(t_fraction >= 0.0 && t_fraction <= 1.0))
        throw CircuitError("t_fraction must lie in [0, 1]");

    std::mt19937_64 rng(seed);
    const auto t_count = static_cast<std::size_t>(std::floor(t_fraction * static_cast<double>(num_gates) + 0.5));

    // Fisher-Yates; the first t_count positions become T gates.
    std::vector<std::size_t> order(num_gates);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = num_gates; i > 1; --i)
        std::swap(order[i - 1], order[draw_below(rng, i)]);
    std::vector<bool> is_t(num_gates, false);
    for (std::size_t i = 0; i < t_count; ++i)
        is_t[order[i]] = true;

    static constexpr std::array<GateKind, 5> pool{GateKind::H, GateKind::S, GateKind::X, GateKind::Z,
                                                  GateKind::CNOT};
    const std::uint64_t pool_size = num_qubits > 1 ? pool.size() : pool.size() - 1;

    Circuit circuit{num_qubits, {}};
    circuit.gates.reserve(num_gates);
    for (std::size_t i = 0; i < num_gates; ++i) {
        if (is_t[i]) {
            circuit.gates.push_back(Gate::single(GateKind::T, draw_below(rng, num_qubits)));
            continue;
        }
        const auto kind = pool[draw_below(rng, pool_size)];
        if (kind == GateKind::CNOT) {
            const auto control = draw_below(rng, num_qubits);
            auto target = draw_below(rng, num_qubits - 1);
            if (target >= control)
                ++target;
            circuit.gates.push_back(Gate::cnot(control, target));
        } else {
            circuit.gates.push_back(Gate::single(kind, draw_below(rng, num_qubits)));
        }
    }
    return circuit;
}

}  // namespace latsurg
