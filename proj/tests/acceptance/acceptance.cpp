// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include "latsurg/benchmark.hpp"
#include "latsurg/estimator.hpp"
#include "latsurg/export.hpp"
#include "latsurg/router.hpp"

#include "corpus.hpp"
#include "invariants.hpp"
#include "oracles/bfs.hpp"
#include "oracles/sk_bruteforce.hpp"
#include "oracles/statevector.hpp"
#include "oracles/surgery_sim.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

using namespace latsurg;

namespace {

struct Outcome {
    bool pass{false};
    std::string detail;
};

int failures = 0;

void criterion(const char* name, const std::function<Outcome()>& body) {
    const auto begin = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    std::printf("%s %s (%.2fs) %s\n", out.pass ? "PASS" : "FAIL", name, secs, out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass)
        ++failures;
}

std::vector<Compilation> compiled_corpus() {
    std::vector<Compilation> out;
    for (const auto& c : corpus::random_corpus(50))
        out.push_back(compile(c));
    return out;
}

}  // namespace

int main() {
    const auto corpus_begin = std::chrono::steady_clock::now();
    const auto corpus = compiled_corpus();
    const double corpus_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - corpus_begin).count();

    criterion("volume_identity", [&] {
        std::size_t ok = 0;
        for (const auto& r : corpus) {
            const auto& a = r.assembly;
            if (assembly_volume(a) == a.layout.footprint() * a.num_steps && assembly_volume(a) == a.cuboids.size() &&
                r.report.volume == assembly_volume(a))
                ++ok;
        }
        return Outcome{ok == corpus.size() && corpus_secs < 60,
                       std::to_string(ok) + "/" + std::to_string(corpus.size()) + " circuits, compile " +
                           std::to_string(corpus_secs) + "s"};
    });

    criterion("fig2_fixture", [] {
        CompileOptions opt;
        opt.layout = {8, 4, 3};
        const auto r = compile(parse_circuit("qubits 16\nS 0\n"), opt);
        const auto doc = nlohmann::json::parse(assembly_to_string(r.assembly, r.report));
        const auto records = doc.at("cells").size();
        return Outcome{r.report.footprint == 64 && r.report.num_steps == 2 && records == 128,
                       "footprint " + std::to_string(r.report.footprint) + ", steps " +
                           std::to_string(r.report.num_steps) + ", records " + std::to_string(records)};
    });

    criterion("physical_qubits", [] {
        const auto q = physical_qubits(1, 3);
        return Outcome{q == 25, "footprint 1, d 3 -> " + std::to_string(q)};
    });

    criterion("preparation_time_linearity", [] {
        BenchmarkOptions opt;
        opt.qubit_counts = {100};
        opt.gate_counts = {100, 200, 400, 600, 800};
        opt.seeds_per_config = 10;
        opt.t_fraction = 0.5;
        const auto cells = run_benchmark(opt);
        std::vector<double> x, y;
        std::string detail = "pt:";
        for (const auto& c : cells) {
            if (c.failed)
                return Outcome{false, "cell failed: " + c.error};
            x.push_back(double(c.gates));
            y.push_back(c.pt_mean_seconds);
            detail += " " + std::to_string(c.pt_mean_seconds);
        }
        const auto fit = fit_line(x, y);
        return Outcome{fit.r_squared >= 0.98, "R^2 " + std::to_string(fit.r_squared) + ";" + detail};
    });

    criterion("ancilla_overhead", [] {
        bool ok = true;
        std::string detail;
        for (const std::size_t n : {10, 50, 100, 200}) {
            const auto g = build_layout(n);
            const double ratio = double(g.count(CellKind::AncillaRoute)) / double(g.count(CellKind::Data));
            ok = ok && ratio >= 0.35 && ratio <= 0.75;
            detail += "n=" + std::to_string(n) + ":" + std::to_string(ratio) + " ";
        }
        return Outcome{ok, detail};
    });

    criterion("router_optimality", [] {
        std::mt19937_64 rng(424242);
        std::bernoulli_distribution occupied(0.3);
        std::uniform_int_distribution<int> coord(0, 19);
        int agree = 0, routed = 0;
        for (int trial = 0; trial < 100; ++trial) {
            RouteGrid g{20, 20, std::vector<bool>(400)};
            for (std::size_t i = 0; i < 400; ++i)
                g.passable[i] = !occupied(rng);
            Cell s{coord(rng), coord(rng)}, d{coord(rng), coord(rng)};
            while (d == s)
                d = {coord(rng), coord(rng)};
            const auto expected = oracle::bfs_route_length(20, 20, g.passable, s.x, s.y, d.x, d.y);
            try {
                const auto path = astar_route(g, s, d);
                ++routed;
                agree += expected && int(path.cells.size()) == *expected ? 1 : 0;
            } catch (const NoRoute&) {
                agree += expected ? 0 : 1;
            }
        }
        return Outcome{agree == 100, std::to_string(agree) + "/100 agree, " + std::to_string(routed) + " routed"};
    });

    criterion("lowering_correctness", [] {
        std::mt19937_64 rng(7);
        double worst = 0;
        int branches = 0;
        auto run = [&](const std::vector<SurgeryOp>& ops, const oracle::State& in, const oracle::State& want) {
            const auto m = oracle::count_measurements(ops);
            for (std::size_t bits = 0; bits < (std::size_t{1} << m); ++bits) {
                const auto b = oracle::execute(ops, in, [bits](std::size_t k) { return int((bits >> k) & 1); });
                if (b.probability == 0)
                    continue;
                ++branches;
                worst = std::max(worst, std::abs(1 - oracle::fidelity(b.state, want)));
            }
        };
        for (int trial = 0; trial < 5; ++trial) {
            const auto in = oracle::random_state(2, rng);
            for (const auto [c, t] : {std::pair{0, 1}, std::pair{1, 0}}) {
                auto want = in;
                want.cnot(c, t);
                run(lower_cnot(c, t), in, want);
            }
            for (const bool adj : {false, true}) {
                auto want = in;
                want.apply(adj ? oracle::kTdg : oracle::kT, 0);
                run(lower_t(0, adj), in, want);
            }
        }
        return Outcome{worst < 1e-9, std::to_string(branches) + " branches, worst deviation " + std::to_string(worst)};
    });

    criterion("solovay_kitaev_contraction", [] {
        std::mt19937_64 rng(2718);
        std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
        int monotone = 0, oracle_match = 0;
        double worst_ratio = 0;
        for (int k = 0; k < 20; ++k) {
            const double a = angle(rng);
            const auto u = sk::rz(a);
            double d[3];
            for (std::size_t depth = 0; depth < 3; ++depth)
                d[depth] = sk::trace_distance(u, sk::solovay_kitaev(u, depth).matrix);
            monotone += (d[1] <= d[0] && d[2] <= d[1]) ? 1 : 0;
            if (d[0] > 0)
                worst_ratio = std::max(worst_ratio, d[2] / d[0]);

            const auto brute = oracle::brute_force_base({u(0, 0), u(0, 1), u(1, 0), u(1, 1)}, 6);
            const auto mine = sk::base_approximation(u, 6);
            std::vector<GateKind> expected;
            for (const int g : brute.word)
                expected.push_back(g == 0 ? GateKind::H : g == 1 ? GateKind::T : GateKind::TDag);
            oracle_match += mine.gates == expected ? 1 : 0;
        }
        return Outcome{monotone == 20 && oracle_match == 20,
                       std::to_string(monotone) + "/20 monotone, " + std::to_string(oracle_match) +
                           "/20 oracle matches, worst d2/d0 " + std::to_string(worst_ratio)};
    });

    criterion("scheduler_constraints", [&] {
        std::size_t clean = 0;
        std::string first;
        for (const auto& r : corpus) {
            const auto bad = invariants::check(r.assembly);
            if (bad.empty())
                ++clean;
            else if (first.empty())
                first = bad.front();
        }
        return Outcome{clean == corpus.size(),
                       std::to_string(clean) + "/" + std::to_string(corpus.size()) + " clean " + first};
    });

    criterion("s_gate_duration", [] {
        const auto steps = compile(parse_circuit("qubits 1\nS 0\n")).report.num_steps;
        return Outcome{steps == 2, "steps " + std::to_string(steps)};
    });

    return failures == 0 ? 0 : 1;
}
