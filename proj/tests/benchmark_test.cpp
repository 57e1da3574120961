#include "latsurg/benchmark.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace latsurg;

TEST(benchmark, zero_gates_give_zero_volume) {
    BenchmarkOptions opt;
    opt.qubit_counts = {4};
    opt.gate_counts = {0};
    opt.seeds_per_config = 3;
    const auto cells = run_benchmark(opt);
    ASSERT_EQ(cells.size(), 1u);
    EXPECT_EQ(cells[0].volume_mean, 0.0);
    EXPECT_FALSE(cells[0].failed);
}

TEST(benchmark, volume_column_is_deterministic) {
    BenchmarkOptions opt;
    opt.qubit_counts = {5, 12};
    opt.gate_counts = {20, 60};
    opt.seeds_per_config = 3;
    const auto a = run_benchmark(opt);
    const auto b = run_benchmark(opt);
    ASSERT_EQ(a.size(), 4u);
    for (std::size_t i = 0; i < a.size(); ++i)
        EXPECT_EQ(a[i].volume_mean, b[i].volume_mean);
    EXPECT_EQ(a[1].qubits, 5u);
    EXPECT_EQ(a[1].gates, 60u);
}

TEST(benchmark, volume_mean_averages_seeds) {
    BenchmarkOptions opt;
    opt.qubit_counts = {6};
    opt.gate_counts = {30};
    opt.seeds_per_config = 4;
    opt.base_seed = 10;
    double sum = 0;
    for (std::uint64_t k = 0; k < 4; ++k)
        sum += double(compile(generate_random_circuit(6, 30, 0.5, 10 + k)).report.volume);
    EXPECT_DOUBLE_EQ(run_benchmark(opt)[0].volume_mean, sum / 4);
}

TEST(benchmark, csv_format) {
    std::vector<BenchmarkCell> cells{{10, 100, 1280.5, 0.25, false, {}}, {10, 200, 0, 0, true, "boom"}};
    cells[1].volume_mean = cells[1].pt_mean_seconds = std::numeric_limits<double>::quiet_NaN();
    std::ostringstream out;
    write_benchmark_csv(out, cells);
    EXPECT_EQ(out.str(), "qub,gates,volume_mean,pt_mean_seconds\n10,100,1280.5,0.25\n10,200,nan,nan\n");
}

TEST(benchmark, fit_line) {
    const std::vector<double> x{1, 2, 3, 4};
    const std::vector<double> y{3, 5, 7, 9};
    const auto fit = fit_line(x, y);
    EXPECT_DOUBLE_EQ(fit.slope, 2);
    EXPECT_DOUBLE_EQ(fit.intercept, 1);
    EXPECT_DOUBLE_EQ(fit.r_squared, 1);
    // Hand-computed: x = 0,1,2; y = 0,2,1 gives slope 0.5 and R^2 = 0.25.
    const auto rough = fit_line(std::vector<double>{0, 1, 2}, std::vector<double>{0, 2, 1});
    EXPECT_DOUBLE_EQ(rough.slope, 0.5);
    EXPECT_DOUBLE_EQ(rough.r_squared, 0.25);
    EXPECT_THROW(fit_line(std::vector<double>{1}, std::vector<double>{1}), std::invalid_argument);
}

TEST(benchmark, rejects_empty_lists) {
    BenchmarkOptions opt;
    opt.gate_counts = {10};
    EXPECT_THROW(run_benchmark(opt), std::invalid_argument);
}
