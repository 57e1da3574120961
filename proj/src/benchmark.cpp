#include "latsurg/benchmark.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace latsurg {

namespace {

std::string number(double v) {
    if (v != v)
        return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::vector<BenchmarkCell> run_benchmark(const BenchmarkOptions& options) {
    if (options.qubit_counts.empty() || options.gate_counts.empty())
        throw std::invalid_argument("benchmark needs at least one qubit count and one gate count");
    if (options.seeds_per_config == 0)
        throw std::invalid_argument("benchmark needs at least one seed per configuration");

    std::vector<BenchmarkCell> cells;
    for (const auto qubits : options.qubit_counts) {
        for (const auto gates : options.gate_counts) {
            BenchmarkCell cell{qubits, gates, 0, 0, false, {}};
            try {
                for (std::size_t k = 0; k < options.seeds_per_config; ++k) {
                    const auto circuit =
                        generate_random_circuit(qubits, gates, options.t_fraction, options.base_seed + k);
                    const auto result = compile(circuit, options.compile);
                    cell.volume_mean += static_cast<double>(result.report.volume);
                    cell.pt_mean_seconds += result.report.preparation_seconds;
                }
                cell.volume_mean /= static_cast<double>(options.seeds_per_config);
                cell.pt_mean_seconds /= static_cast<double>(options.seeds_per_config);
            } catch (const std::exception& e) {
                cell.failed = true;
                cell.error = e.what();
                cell.volume_mean = cell.pt_mean_seconds = std::numeric_limits<double>::quiet_NaN();
            }
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkCell>& cells) {
    out << "qub,gates,volume_mean,pt_mean_seconds\n";
    for (const auto& c : cells)
        out << c.qubits << ',' << c.gates << ',' << number(c.volume_mean) << ',' << number(c.pt_mean_seconds) << '\n';
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line needs two equally long series of at least two points");
    const auto n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0)
        throw std::invalid_argument("fit_line: x values are all equal");
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

}  // namespace latsurg
