#ifndef LATSURG_BENCHMARK_HPP
#define LATSURG_BENCHMARK_HPP

#include "latsurg/estimator.hpp"

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace latsurg {

struct BenchmarkOptions {
    std::vector<std::size_t> qubit_counts;
    std::vector<std::size_t> gate_counts;
    double t_fraction{0.5};
    std::size_t seeds_per_config{10};
    std::uint64_t base_seed{1};  // circuit k of every cell uses base_seed + k
    CompileOptions compile;
};

struct BenchmarkCell {
    std::size_t qubits{0};
    std::size_t gates{0};
    double volume_mean{0};
    double pt_mean_seconds{0};
    bool failed{false};
    std::string error;
};

// Cells are compiled one after another so that timings do not compete.
std::vector<BenchmarkCell> run_benchmark(const BenchmarkOptions& options);

// Header qub,gates,volume_mean,pt_mean_seconds; failed cells print nan.
void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkCell>& cells);

struct LineFit {
    double slope{0};
    double intercept{0};
    double r_squared{0};
};

// Ordinary least squares y = slope * x + intercept.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace latsurg

#endif  // LATSURG_BENCHMARK_HPP
