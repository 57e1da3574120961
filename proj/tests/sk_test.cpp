#include "latsurg/sk.hpp"

#include "oracles/sk_bruteforce.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

using namespace latsurg;
using namespace latsurg::sk;

namespace {

oracle::c2 raw(const Unitary2& u) { return {u(0, 0), u(0, 1), u(1, 0), u(1, 1)}; }

std::vector<GateKind> as_gates(const std::vector<int>& word) {
    std::vector<GateKind> out;
    for (const int g : word)
        out.push_back(g == 0 ? GateKind::H : g == 1 ? GateKind::T : GateKind::TDag);
    return out;
}

}  // namespace

TEST(sk, trace_distance_of_small_rotation) {
    // sqrt(1 - cos 0.1), evaluated independently.
    EXPECT_NEAR(trace_distance(rz(0.2), Unitary2::Identity()), 0.07068121901873353, 1e-12);
    EXPECT_NEAR(trace_distance(gate_matrix(GateKind::T), rz(std::numbers::pi / 4)), 0.0, 1e-7);
}

TEST(sk, trace_distance_rejects_non_unitary) {
    Unitary2 m = Unitary2::Identity();
    m(0, 0) = 2;
    EXPECT_THROW(trace_distance(m, Unitary2::Identity()), SkError);
}

TEST(sk, base_approximation_matches_exhaustive_search) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (int k = 0; k < 10; ++k) {
        const Unitary2 u = rz(angle(rng)) * rx(angle(rng)) * rz(angle(rng));
        const auto brute = oracle::brute_force_base(raw(u), 6);
        const auto seq = base_approximation(u, 6);
        EXPECT_EQ(seq.gates, as_gates(brute.word));
        EXPECT_NEAR(trace_distance(u, seq.matrix), brute.distance, 1e-12);
    }
}

TEST(sk, base_approximation_of_exact_word) {
    const std::vector<GateKind> word{GateKind::H, GateKind::T, GateKind::H};
    EXPECT_EQ(base_approximation(compose(word)).gates, word);
    EXPECT_TRUE(base_approximation(Unitary2::Identity()).gates.empty());
}

TEST(sk, group_commutator_reproduces_delta) {
    for (const double a : {0.01, 0.05, 0.2, -0.3}) {
        const Unitary2 delta = rx(a) * rz(0.5 * a);
        const auto [v, w] = group_commutator(delta);
        const Unitary2 c = v * w * v.adjoint() * w.adjoint();
        EXPECT_LT(trace_distance(c, delta), 1e-10) << a;
        EXPECT_NEAR(trace_distance(v, Unitary2::Identity()), trace_distance(w, Unitary2::Identity()), 1e-10);
    }
    EXPECT_THROW(group_commutator(rx(2.5)), SkError);
}

TEST(sk, solovay_kitaev_word_matches_matrix) {
    const auto seq = solovay_kitaev(rz(0.7), 1);
    EXPECT_LT(trace_distance(compose(seq.gates), seq.matrix), 1e-9);
    const auto adj = adjoint(seq);
    EXPECT_LT(trace_distance(compose(adj.gates), seq.matrix.adjoint()), 1e-9);
}

TEST(sk, depth_improves_accuracy) {
    // Measured for this base net: depth 2 lands between 1e-3 and 2e-3 here.
    for (const double a : {0.3, 1.1, -2.0}) {
        const double d0 = trace_distance(rz(a), solovay_kitaev(rz(a), 0).matrix);
        const double d2 = trace_distance(rz(a), solovay_kitaev(rz(a), 2).matrix);
        EXPECT_LE(d2, d0) << a;
        EXPECT_LT(d2, 3e-3) << a;
    }
}

TEST(sk, fuse_t_pairs) {
    using G = GateKind;
    EXPECT_EQ(fuse_t_pairs(std::vector{G::T, G::T, G::T, G::H, G::TDag, G::TDag}),
              (std::vector{G::S, G::T, G::H, G::SDag}));
    const std::vector word{G::T, G::T, G::H, G::T, G::TDag};
    EXPECT_LT(trace_distance(compose(fuse_t_pairs(word)), compose(word)), 1e-12);
}
