// Recounts scheduler constraints directly from an Assembly's cuboids and
// schedule. Returns human-readable violations, empty when all hold.
#ifndef LATSURG_TESTS_INVARIANTS_HPP
#define LATSURG_TESTS_INVARIANTS_HPP

#include "latsurg/assembler.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace invariants {

inline std::vector<std::string> check(const latsurg::Assembly& a) {
    using latsurg::CellKind;
    using latsurg::CuboidKind;
    using latsurg::SurgeryOpKind;

    std::vector<std::string> bad;
    const auto footprint = a.layout.footprint();
    if (a.cuboids.size() != footprint * a.num_steps)
        bad.push_back("cuboid count differs from footprint * steps");
    if (a.volume() != a.cuboids.size())
        bad.push_back("volume differs from the cuboid count");
    if (!bad.empty())
        return bad;

    for (std::size_t t = 0; t < a.num_steps; ++t) {
        std::set<std::size_t> route_ops;
        std::set<std::size_t> distill_ops;
        for (std::size_t k = 0; k < footprint; ++k) {
            const auto& c = a.cuboids[t * footprint + k];
            const auto cell = a.layout.cell_at(k);
            if (c.t != t || c.x != cell.x || c.y != cell.y)
                bad.push_back("cuboid order broken at t=" + std::to_string(t));
            if (c.kind == CuboidKind::RouteActive) {
                if (!c.op)
                    bad.push_back("route cuboid without op at t=" + std::to_string(t));
                else
                    route_ops.insert(*c.op);
            }
            if (c.kind == CuboidKind::DistillationActive)
                distill_ops.insert(c.op.value_or(SIZE_MAX));
            if (a.layout.kind(cell) == CellKind::Data && c.kind != CuboidKind::DataIdle &&
                c.kind != CuboidKind::DataActive)
                bad.push_back("data cell not occupied at t=" + std::to_string(t));
        }
        if (route_ops.size() > 1)
            bad.push_back("several routed instructions at t=" + std::to_string(t));
        if (distill_ops.size() > 1)
            bad.push_back("several distillations at t=" + std::to_string(t));

        std::size_t merges = 0;
        for (const auto& s : a.schedule) {
            const bool merge = s.kind == SurgeryOpKind::MeasureZZ || s.kind == SurgeryOpKind::MeasureXX;
            if (merge && s.start <= t && t < s.start + s.duration)
                ++merges;
        }
        if (merges > 1)
            bad.push_back("several multi-body measurements at t=" + std::to_string(t));

        std::size_t running = 0;
        for (const auto& d : a.distillations)
            running += (d.start <= t && t < d.start + d.duration) ? 1 : 0;
        if (running > 1)
            bad.push_back("overlapping distillations at t=" + std::to_string(t));
    }

    // Every prefix [0, t]: states delivered >= states requested.
    for (std::size_t t = 0; t <= a.num_steps; ++t) {
        std::size_t done = 0, used = 0;
        for (const auto& d : a.distillations)
            done += d.start + d.duration <= t ? 1 : 0;
        for (const auto& s : a.schedule)
            used += (s.kind == SurgeryOpKind::RequestMagicState && s.start <= t) ? 1 : 0;
        if (used > done) {
            bad.push_back("magic state consumed before distillation finished at t=" + std::to_string(t));
            break;
        }
    }
    return bad;
}

}  // namespace invariants

#endif  // LATSURG_TESTS_INVARIANTS_HPP
