#include "latsurg/sk.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <unordered_set>

namespace latsurg::sk {

namespace {

using cd = std::complex<double>;

constexpr std::array<GateKind, 3> kBaseAlphabet{GateKind::H, GateKind::T, GateKind::TDag};
constexpr double kTieTolerance = 1e-12;

Unitary2 pauli_x() { return (Unitary2() << 0, 1, 1, 0).finished(); }
Unitary2 pauli_y() { return (Unitary2() << 0, cd(0, -1), cd(0, 1), 0).finished(); }
Unitary2 pauli_z() { return (Unitary2() << 1, 0, 0, -1).finished(); }

Unitary2 rotation(const Eigen::Vector3d& axis, double angle) {
    const Unitary2 generator = axis.x() * pauli_x() + axis.y() * pauli_y() + axis.z() * pauli_z();
    return std::cos(angle / 2) * Unitary2::Identity() - cd(0, 1) * std::sin(angle / 2) * generator;
}

// Special-unitary representative with Re(tr) >= 0.
Unitary2 canonical_su(const Unitary2& u) {
    Unitary2 su = to_special_unitary(u);
    if (su.trace().real() < 0)
        su = -su;
    return su;
}

struct AxisAngle {
    Eigen::Vector3d axis;
    double angle;
};

AxisAngle axis_angle(const Unitary2& u) {
    const Unitary2 su = canonical_su(u);
    const double c = std::clamp(su.trace().real() / 2, -1.0, 1.0);
    Eigen::Vector3d b((cd(0, 1) * (su * pauli_x()).trace() / 2.0).real(),
                      (cd(0, 1) * (su * pauli_y()).trace() / 2.0).real(),
                      (cd(0, 1) * (su * pauli_z()).trace() / 2.0).real());
    const double norm = b.norm();
    if (norm < 1e-15)
        return {Eigen::Vector3d::UnitZ(), 0.0};
    return {b / norm, 2 * std::acos(c)};
}

// Deduplicated enumeration of {H, T, T^dag} words in (length, lexicographic)
// order. Each distinct unitary keeps its first word, which is the shortest
// and lexicographically smallest one.
struct BaseNet {
    struct Entry {
        Unitary2 su;
        std::uint32_t parent;
        GateKind last;
        std::uint8_t length;
    };
    std::vector<Entry> entries;

    std::vector<GateKind> word(std::size_t index) const {
        std::vector<GateKind> gates(entries[index].length);
        for (auto i = gates.size(); i > 0; --i) {
            gates[i - 1] = entries[index].last;
            index = entries[index].parent;
        }
        return gates;
    }
};

using NetKey = std::array<long long, 4>;

struct NetKeyHash {
    std::size_t operator()(const NetKey& k) const noexcept {
        std::size_t h = 0;
        for (const auto v : k)
            h = h * 1000003u ^ std::hash<long long>{}(v);
        return h;
    }
};

// The projective class of an SU(2) element: entries (a, b) of [[a, b], [-b*, a*]]
// up to a common sign.
NetKey net_key(const Unitary2& su) {
    std::array<double, 4> c{su(0, 0).real(), su(0, 0).imag(), su(0, 1).real(), su(0, 1).imag()};
    const auto lead = std::find_if(c.begin(), c.end(), [](double v) { return std::abs(v) > 1e-9; });
    const double sign = (lead != c.end() && *lead < 0) ? -1.0 : 1.0;
    NetKey key{};
    for (std::size_t i = 0; i < 4; ++i)
        key[i] = std::llround(sign * c[i] * 1e9);
    return key;
}

std::unique_ptr<BaseNet> build_net(std::size_t max_len) {
    auto net = std::make_unique<BaseNet>();
    std::array<Unitary2, 3> gate_su;
    for (std::size_t g = 0; g < kBaseAlphabet.size(); ++g)
        gate_su[g] = to_special_unitary(gate_matrix(kBaseAlphabet[g]));

    std::unordered_set<NetKey, NetKeyHash> seen;
    net->entries.push_back({Unitary2::Identity(), 0, GateKind::H, 0});
    seen.insert(net_key(Unitary2::Identity()));

    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t level_end = net->entries.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (std::size_t g = 0; g < kBaseAlphabet.size(); ++g) {
                const Unitary2 m = gate_su[g] * net->entries[i].su;
                if (seen.insert(net_key(m)).second)
                    net->entries.push_back(
                        {m, static_cast<std::uint32_t>(i), kBaseAlphabet[g], static_cast<std::uint8_t>(len)});
            }
        }
        level_begin = level_end;
    }
    return net;
}

const BaseNet& base_net(std::size_t max_len) {
    static std::mutex mutex;
    static std::map<std::size_t, std::unique_ptr<BaseNet>> cache;
    const std::lock_guard lock(mutex);
    auto& slot = cache[max_len];
    if (!slot)
        slot = build_net(max_len);
    return *slot;
}

GateKind adjoint_kind(GateKind g) {
    switch (g) {
        case GateKind::T: return GateKind::TDag;
        case GateKind::TDag: return GateKind::T;
        case GateKind::S: return GateKind::SDag;
        case GateKind::SDag: return GateKind::S;
        default: return g;
    }
}

}  // namespace

Unitary2 gate_matrix(GateKind kind) {
    const double r = 1 / std::numbers::sqrt2;
    const cd w = std::polar(1.0, std::numbers::pi / 4);
    switch (kind) {
        case GateKind::H: return (Unitary2() << r, r, r, -r).finished();
        case GateKind::S: return (Unitary2() << 1, 0, 0, cd(0, 1)).finished();
        case GateKind::SDag: return (Unitary2() << 1, 0, 0, cd(0, -1)).finished();
        case GateKind::T: return (Unitary2() << 1, 0, 0, w).finished();
        case GateKind::TDag: return (Unitary2() << 1, 0, 0, std::conj(w)).finished();
        case GateKind::X: return pauli_x();
        case GateKind::Z: return pauli_z();
        default: throw SkError("no single-qubit matrix for " + std::string(gate_mnemonic(kind)));
    }
}

Unitary2 rz(double angle) {
    return (Unitary2() << std::polar(1.0, -angle / 2), 0, 0, std::polar(1.0, angle / 2)).finished();
}

Unitary2 rx(double angle) { return rotation(Eigen::Vector3d::UnitX(), angle); }

Unitary2 compose(std::span<const GateKind> gates) {
    Unitary2 m = Unitary2::Identity();
    for (const auto g : gates)
        m = gate_matrix(g) * m;
    return m;
}

bool is_unitary(const Unitary2& u, double tol) {
    return ((u * u.adjoint()) - Unitary2::Identity()).cwiseAbs().maxCoeff() <= tol;
}

Unitary2 to_special_unitary(const Unitary2& u) { return u / std::sqrt(u.determinant()); }

double trace_distance(const Unitary2& u, const Unitary2& v) {
    if (!is_unitary(u) || !is_unitary(v))
        throw SkError("trace_distance: input is not unitary");
    const cd tr = (to_special_unitary(u).adjoint() * to_special_unitary(v)).trace();
    return std::sqrt(std::max(0.0, 2.0 - std::abs(tr)) / 2.0);
}

GateSequence base_approximation(const Unitary2& u, std::size_t max_len) {
    if (!is_unitary(u))
        throw SkError("base_approximation: input is not unitary");
    const Unitary2 target = to_special_unitary(u).adjoint();
    const auto& net = base_net(max_len);

    std::size_t best = 0;
    double best_distance = 2.0;
    for (std::size_t i = 0; i < net.entries.size(); ++i) {
        const cd tr = (target * net.entries[i].su).trace();
        const double d = std::sqrt(std::max(0.0, 2.0 - std::abs(tr)) / 2.0);
        if (d < best_distance - kTieTolerance) {
            best_distance = d;
            best = i;
        }
    }
    GateSequence seq;
    seq.gates = net.word(best);
    seq.matrix = compose(seq.gates);
    return seq;
}

std::pair<Unitary2, Unitary2> group_commutator(const Unitary2& delta) {
    if (trace_distance(delta, Unitary2::Identity()) >= 0.5)
        throw SkError("group_commutator: delta is too far from the identity");

    const auto [target_axis, theta] = axis_angle(delta);
    if (theta == 0.0)
        return {Unitary2::Identity(), Unitary2::Identity()};

    // sin(theta/2) = 2 sin^2(phi/2) sqrt(1 - sin^4(phi/2))
    const double phi = 2 * std::asin(std::sqrt(std::sin(theta / 4)));
    Unitary2 v = rx(phi);
    Unitary2 w = rotation(Eigen::Vector3d::UnitY(), phi);

    const auto [commutator_axis, ignored] = axis_angle(v * w * v.adjoint() * w.adjoint());
    const Eigen::Vector3d cross = commutator_axis.cross(target_axis);
    const double dot = commutator_axis.dot(target_axis);
    Unitary2 similarity = Unitary2::Identity();
    if (cross.norm() > 1e-12) {
        similarity = rotation(cross.normalized(), std::atan2(cross.norm(), dot));
    } else if (dot < 0) {
        const Eigen::Vector3d perp = commutator_axis.unitOrthogonal();
        similarity = rotation(perp, std::numbers::pi);
    }
    v = similarity * v * similarity.adjoint();
    w = similarity * w * similarity.adjoint();
    return {v, w};
}

GateSequence adjoint(const GateSequence& seq) {
    GateSequence out;
    out.gates.reserve(seq.gates.size());
    for (auto it = seq.gates.rbegin(); it != seq.gates.rend(); ++it)
        out.gates.push_back(adjoint_kind(*it));
    out.matrix = seq.matrix.adjoint();
    return out;
}

GateSequence solovay_kitaev(const Unitary2& u, std::size_t depth, std::size_t base_length) {
    if (depth == 0)
        return base_approximation(u, base_length);

    const GateSequence previous = solovay_kitaev(u, depth - 1, base_length);
    const Unitary2 delta = u * previous.matrix.adjoint();
    std::pair<Unitary2, Unitary2> vw;
    try {
        vw = group_commutator(delta);
    } catch (const SkError& e) {
        throw SkError(std::string("solovay_kitaev: insufficient base accuracy (") + e.what() + ")");
    }

    const GateSequence v = solovay_kitaev(vw.first, depth - 1, base_length);
    const GateSequence w = solovay_kitaev(vw.second, depth - 1, base_length);
    const GateSequence v_adj = adjoint(v);
    const GateSequence w_adj = adjoint(w);

    // Matrix order v w v^dag w^dag previous; the word lists gates in
    // application order.
    GateSequence out;
    for (const auto* part : {&previous, &w_adj, &v_adj, &w, &v})
        out.gates.insert(out.gates.end(), part->gates.begin(), part->gates.end());
    out.matrix = compose(out.gates);
    return out;
}

std::vector<GateKind> fuse_t_pairs(std::span<const GateKind> gates) {
    std::vector<GateKind> out;
    out.reserve(gates.size());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const bool pair = i + 1 < gates.size() && gates[i] == gates[i + 1] &&
                          (gates[i] == GateKind::T || gates[i] == GateKind::TDag);
        if (pair) {
            out.push_back(gates[i] == GateKind::T ? GateKind::S : GateKind::SDag);
            ++i;
        } else {
            out.push_back(gates[i]);
        }
    }
    return out;
}

}  // namespace latsurg::sk
