#ifndef LATSURG_ESTIMATOR_HPP
#define LATSURG_ESTIMATOR_HPP

#include "latsurg/assembler.hpp"
#include "latsurg/circuit.hpp"
#include "latsurg/layout.hpp"
#include "latsurg/lowering.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>

namespace latsurg {

class EstimatorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct EstimatorConfig {
    long long code_distance{3};
    double cycle_seconds{1e-6};
    std::optional<std::size_t> cycles_per_step;  // defaults to code_distance

    void validate() const;
    std::size_t effective_cycles_per_step() const;
};

struct ResourceReport {
    std::size_t footprint{0};
    std::size_t num_steps{0};
    std::size_t volume{0};
    long long code_distance{3};
    std::size_t physical_qubits{0};
    double est_execution_seconds{0};
    double preparation_seconds{0};
    std::size_t qubit_count{0};
    std::size_t gate_count{0};
    std::size_t t_count{0};  // magic states consumed after rotation synthesis

    bool operator==(const ResourceReport&) const = default;
};

// A distance-d rotated surface-code patch spans (2d - 1)^2 physical qubits.
std::size_t physical_qubits(std::size_t footprint, long long distance);

double execution_time(const Assembly& assembly, const EstimatorConfig& config = {});

struct CompileOptions {
    LayoutConfig layout;
    LoweringOptions lowering;
    ScheduleConfig schedule;
    EstimatorConfig estimator;
};

struct Compilation {
    LoweredProgram program;
    Assembly assembly;
    ResourceReport report;
};

// Lowering, layout, scheduling and estimation in one call. The report's
// preparation_seconds is the wall-clock time of this function.
Compilation compile(const Circuit& circuit, const CompileOptions& options = {});

}  // namespace latsurg

#endif  // LATSURG_ESTIMATOR_HPP
