// latsurg: compile Clifford+T / RZ circuits into lattice-surgery assemblies and
// estimate their resources.

#include "latsurg/benchmark.hpp"
#include "latsurg/estimator.hpp"
#include "latsurg/export.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace latsurg;

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error(path + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_circuit(buf.str());
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ":" + std::to_string(e.line()) + ": " + e.what());
    }
}

void print_report(std::ostream& out, const ResourceReport& r) {
    out << "qubits                " << r.qubit_count << "\n"
        << "gates                 " << r.gate_count << "\n"
        << "t_count               " << r.t_count << "\n"
        << "footprint             " << r.footprint << "\n"
        << "num_steps             " << r.num_steps << "\n"
        << "volume                " << r.volume << "\n"
        << "code_distance         " << r.code_distance << "\n"
        << "physical_qubits       " << r.physical_qubits << "\n"
        << "est_execution_seconds " << r.est_execution_seconds << "\n"
        << "preparation_seconds   " << r.preparation_seconds << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice-surgery compiler and resource estimator"};
    app.require_subcommand(1);

    CompileOptions options;
    auto add_distance = [&](CLI::App* sub) {
        sub->add_option("--distance,-d", options.estimator.code_distance, "Surface-code distance (odd)");
        sub->add_option("--distillation-steps", options.schedule.distillation_steps,
                        "Steps per magic-state distillation");
    };

    std::string circuit_path;
    std::string out_path;
    std::string report_path;
    auto* compile_cmd = app.add_subcommand("compile", "Compile a circuit and export the assembly");
    compile_cmd->add_option("circuit", circuit_path, "Circuit file")->required();
    compile_cmd->add_option("--out,-o", out_path, "Assembly JSON output");
    compile_cmd->add_option("--report", report_path, "Resource report JSON output");
    add_distance(compile_cmd);

    auto* estimate_cmd = app.add_subcommand("estimate", "Print the resource report of a circuit");
    estimate_cmd->add_option("circuit", circuit_path, "Circuit file")->required();
    add_distance(estimate_cmd);

    std::size_t qubits = 0;
    std::size_t gates = 0;
    double tfrac = 0.5;
    std::uint64_t seed = 1;
    auto* randgen_cmd = app.add_subcommand("randgen", "Write a random Clifford+T circuit");
    randgen_cmd->add_option("--qubits", qubits)->required();
    randgen_cmd->add_option("--gates", gates)->required();
    randgen_cmd->add_option("--tfrac", tfrac)->check(CLI::Range(0.0, 1.0));
    randgen_cmd->add_option("--seed", seed);
    randgen_cmd->add_option("--out,-o", out_path, "Output file (stdout if omitted)");

    BenchmarkOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Average volume and preparation time over random circuits");
    bench_cmd->add_option("--qubits", bench.qubit_counts)->required()->delimiter(',');
    bench_cmd->add_option("--gates", bench.gate_counts)->required()->delimiter(',');
    bench_cmd->add_option("--seeds", bench.seeds_per_config);
    bench_cmd->add_option("--tfrac", bench.t_fraction)->check(CLI::Range(0.0, 1.0));
    bench_cmd->add_option("--base-seed", bench.base_seed);
    bench_cmd->add_option("--out,-o", out_path, "CSV output (stdout if omitted)");

    bool ascii = false;
    auto* layout_cmd = app.add_subcommand("layout", "Print the layout for a qubit count");
    layout_cmd->add_option("--qubits", qubits)->required();
    layout_cmd->add_flag("--ascii", ascii, "Character map instead of JSON");
    layout_cmd->add_option("--row-width", options.layout.data_row_width);
    layout_cmd->add_option("--distillation-width", options.layout.distillation_width);
    layout_cmd->add_option("--distillation-height", options.layout.distillation_height);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compile_cmd) {
            const auto result = compile(load_circuit(circuit_path), options);
            if (!out_path.empty())
                export_assembly(result.assembly, result.report, out_path);
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                if (!out)
                    throw std::runtime_error(report_path + ": cannot open for writing");
                out << report_to_json(result.report) << "\n";
            }
            print_report(std::cout, result.report);
        } else if (*estimate_cmd) {
            print_report(std::cout, compile(load_circuit(circuit_path), options).report);
        } else if (*randgen_cmd) {
            const auto text = serialize_circuit(generate_random_circuit(qubits, gates, tfrac, seed));
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                if (!(out << text))
                    throw std::runtime_error(out_path + ": write failed");
            }
        } else if (*bench_cmd) {
            bench.compile = options;
            const auto cells = run_benchmark(bench);
            for (const auto& c : cells) {
                if (c.failed)
                    std::cerr << "qub=" << c.qubits << " gates=" << c.gates << " failed: " << c.error << "\n";
            }
            if (out_path.empty()) {
                write_benchmark_csv(std::cout, cells);
            } else {
                std::ofstream out(out_path);
                write_benchmark_csv(out, cells);
                if (!out)
                    throw std::runtime_error(out_path + ": write failed");
            }
        } else if (*layout_cmd) {
            const auto layout = build_layout(qubits, options.layout);
            std::cout << (ascii ? layout_to_ascii(layout) : layout_to_json(layout) + "\n");
        }
    } catch (const std::exception& e) {
        std::cerr << "latsurg: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
