#include "latsurg/estimator.hpp"

#include <chrono>
#include <string>

namespace latsurg {

void EstimatorConfig::validate() const {
    if (code_distance < 1 || code_distance % 2 == 0)
        throw EstimatorError("code distance must be odd and positive, got " + std::to_string(code_distance));
    if (!(cycle_seconds > 0))
        throw EstimatorError("cycle time must be positive");
    if (cycles_per_step && *cycles_per_step == 0)
        throw EstimatorError("cycles per step must be positive");
}

std::size_t EstimatorConfig::effective_cycles_per_step() const {
    return cycles_per_step.value_or(static_cast<std::size_t>(code_distance));
}

std::size_t physical_qubits(std::size_t footprint, long long distance) {
    if (distance < 1 || distance % 2 == 0)
        throw EstimatorError("code distance must be odd and positive, got " + std::to_string(distance));
    const auto side = static_cast<std::size_t>(2 * distance - 1);
    return footprint * side * side;
}

double execution_time(const Assembly& assembly, const EstimatorConfig& config) {
    config.validate();
    return static_cast<double>(assembly.num_steps) * static_cast<double>(config.effective_cycles_per_step()) *
           config.cycle_seconds;
}

Compilation compile(const Circuit& circuit, const CompileOptions& options) {
    options.estimator.validate();
    const auto begin = std::chrono::steady_clock::now();

    Compilation out;
    out.program = lower_circuit(circuit, options.lowering);
    const LayoutGrid layout = build_layout(circuit.num_qubits, options.layout);
    out.assembly = schedule(out.program, layout, options.schedule);

    auto& r = out.report;
    r.footprint = layout.footprint();
    r.num_steps = out.assembly.num_steps;
    r.volume = assembly_volume(out.assembly);
    r.code_distance = options.estimator.code_distance;
    r.physical_qubits = physical_qubits(r.footprint, r.code_distance);
    r.est_execution_seconds = execution_time(out.assembly, options.estimator);
    r.qubit_count = circuit.num_qubits;
    r.gate_count = circuit.gates.size();
    r.t_count = out.program.magic_states;
    r.preparation_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    return out;
}

}  // namespace latsurg
