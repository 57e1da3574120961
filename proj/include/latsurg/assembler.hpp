#ifndef LATSURG_ASSEMBLER_HPP
#define LATSURG_ASSEMBLER_HPP

#include "latsurg/boundary.hpp"
#include "latsurg/layout.hpp"
#include "latsurg/lowering.hpp"
#include "latsurg/router.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latsurg {

enum class CuboidKind : std::uint8_t { DataIdle, DataActive, RouteActive, DistillationActive, MagicBuffer, Vacant };

std::string_view to_string(CuboidKind kind);
std::optional<CuboidKind> cuboid_kind_from_string(std::string_view text);

struct Cuboid {
    int x{0};
    int y{0};
    std::size_t t{0};
    CuboidKind kind{CuboidKind::Vacant};
    std::optional<std::size_t> op;
    std::optional<std::array<BoundaryType, 4>> sides;  // Data cuboids only

    bool operator==(const Cuboid&) const = default;
};

// One scheduled step range. Rotations inserted by the scheduler carry kind
// RotatePatch, the index of the instruction that needed them, the rotated
// data cell in `patch` and the borrowed ancilla cell as their route.
struct ScheduledOp {
    std::size_t instruction{0};
    SurgeryOpKind kind{SurgeryOpKind::DirectH};
    std::size_t start{0};
    std::size_t duration{0};
    std::optional<Cell> patch;
    std::vector<Cell> route;

    bool operator==(const ScheduledOp&) const = default;
};

struct Distillation {
    std::size_t request{0};  // instruction index of the RequestMagicState it feeds
    std::size_t start{0};
    std::size_t duration{0};

    bool operator==(const Distillation&) const = default;
};

struct Assembly {
    LayoutGrid layout;
    std::size_t num_steps{0};
    std::vector<Cuboid> cuboids;  // sorted by (t, y, x)
    std::vector<ScheduledOp> schedule;
    std::vector<Distillation> distillations;

    std::size_t volume() const { return layout.footprint() * num_steps; }
    const Cuboid& at(std::size_t t, Cell c) const { return cuboids[t * layout.footprint() + layout.index(c)]; }

    bool operator==(const Assembly&) const = default;
};

std::size_t assembly_volume(const Assembly& assembly);

struct ScheduleConfig {
    std::size_t distillation_steps{10};
    std::size_t rotation_steps{1};
    std::size_t s_steps{2};

    void validate() const;
};

class ScheduleError : public std::runtime_error {
public:
    ScheduleError(std::size_t instruction, const std::string& what);
    std::size_t instruction() const noexcept { return instruction_; }

private:
    std::size_t instruction_;
};

// Sequential schedule: one instruction occupies the time line at a time and
// the single distillation region prefetches the next magic state as soon as
// the previous one has been consumed.
Assembly schedule(const LoweredProgram& program, const LayoutGrid& layout, const ScheduleConfig& config = {});

}  // namespace latsurg

#endif  // LATSURG_ASSEMBLER_HPP
