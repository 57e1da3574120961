#ifndef LATSURG_SK_HPP
#define LATSURG_SK_HPP

#include "latsurg/circuit.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace latsurg::sk {

using Unitary2 = Eigen::Matrix2cd;

class SkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Base-net length used by solovay_kitaev when none is given. A net over
// {H, T, T^dag} of this length holds ~2.2e5 distinct unitaries; shorter nets are
// too coarse for the recursion to contract.
inline constexpr std::size_t kDefaultBaseLength = 26;
inline constexpr std::size_t kDefaultDepth = 2;

struct GateSequence {
    std::vector<GateKind> gates;  // gates.front() is applied first
    Unitary2 matrix{Unitary2::Identity()};
};

Unitary2 gate_matrix(GateKind kind);
Unitary2 rz(double angle);
Unitary2 rx(double angle);
Unitary2 compose(std::span<const GateKind> gates);

bool is_unitary(const Unitary2& u, double tol = 1e-10);

// Rescales u by a square root of its determinant.
Unitary2 to_special_unitary(const Unitary2& u);

// sqrt(max(0, 2 - |tr(u^dag v)|) / 2) on the determinant-one projections.
// Throws SkError on non-unitary input.
double trace_distance(const Unitary2& u, const Unitary2& v);

// Closest sequence over {H, T, T^dag} of length <= max_len. Ties go to the
// shorter sequence, then to the lexicographically smaller one (H < T < T^dag).
GateSequence base_approximation(const Unitary2& u, std::size_t max_len = 6);

// Balanced group commutator: returns (v, w) with v w v^dag w^dag equal to the
// determinant-one, non-negative-trace representative of delta. v and w rotate
// by the same angle. Requires trace_distance(delta, I) < 0.5.
std::pair<Unitary2, Unitary2> group_commutator(const Unitary2& delta);

GateSequence solovay_kitaev(const Unitary2& u, std::size_t depth = kDefaultDepth,
                            std::size_t base_length = kDefaultBaseLength);

GateSequence adjoint(const GateSequence& seq);

// Rewrites adjacent T·T as S and T^dag·T^dag as S^dag.
std::vector<GateKind> fuse_t_pairs(std::span<const GateKind> gates);

}  // namespace latsurg::sk

#endif  // LATSURG_SK_HPP
