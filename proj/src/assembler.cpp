#include "latsurg/assembler.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace latsurg {

namespace {

constexpr std::array<std::pair<CuboidKind, std::string_view>, 6> kCuboidKindNames{{
    {CuboidKind::DataIdle, "DataIdle"},
    {CuboidKind::DataActive, "DataActive"},
    {CuboidKind::RouteActive, "RouteActive"},
    {CuboidKind::DistillationActive, "DistillationActive"},
    {CuboidKind::MagicBuffer, "MagicBuffer"},
    {CuboidKind::Vacant, "Vacant"},
}};

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct StepRecord {
    std::size_t owner{kNone};
    std::vector<Cell> route;
    std::vector<Cell> active_data;
};

struct LiveInterval {
    Cell cell;
    std::size_t from{0};
    std::size_t to{kNone};
    std::size_t op{0};
};

class Scheduler {
public:
    Scheduler(const LoweredProgram& program, const LayoutGrid& layout, const ScheduleConfig& config)
        : program_(program), layout_(layout), config_(config), occupied_(layout.footprint(), false),
          ancilla_(program.ancillas), orientation_(layout.num_qubits()), timeline_(layout.num_qubits()) {
        for (auto& t : timeline_)
            t.push_back({0, PatchOrientation::standard()});
        for (std::size_t i = 0; i < program.ops.size(); ++i) {
            if (program.ops[i].kind == SurgeryOpKind::RequestMagicState)
                requests_.push_back(i);
        }
        distillation_start_.assign(requests_.size(), kNone);
        magic_.resize(requests_.size());
        if (!requests_.empty())
            distillation_start_[0] = 0;
    }

    Assembly run() {
        for (std::size_t i = 0; i < program_.ops.size(); ++i) {
            try {
                process(i, program_.ops[i]);
            } catch (const ScheduleError&) {
                throw;
            } catch (const std::exception& e) {
                throw ScheduleError(i, e.what());
            }
        }
        return finalize();
    }

private:
    struct MagicSlot {
        std::size_t ordinal{kNone};
        std::size_t ready{0};
        std::size_t release{kNone};
        bool live{false};
    };

    std::size_t advance(std::size_t owner, std::size_t duration, const std::vector<Cell>& route,
                        const std::vector<Cell>& active) {
        const auto start = steps_.size();
        for (std::size_t k = 0; k < duration; ++k)
            steps_.push_back({owner, route, active});
        return start;
    }

    std::size_t now() const { return steps_.size(); }

    void record(std::size_t instruction, SurgeryOpKind kind, std::size_t start, std::size_t duration,
                std::optional<Cell> patch, std::vector<Cell> route = {}) {
        schedule_.push_back({instruction, kind, start, duration, patch, std::move(route)});
    }

    Cell cell_of(PatchId p) const {
        switch (p.role) {
            case PatchRole::Data:
                if (p.index >= layout_.num_qubits())
                    throw std::out_of_range("qubit " + std::to_string(p.index) + " is not mapped in the layout");
                return layout_.qubit_cell(p.index);
            case PatchRole::Ancilla:
                if (p.index >= ancilla_.size() || !ancilla_[p.index])
                    throw std::logic_error("ancilla " + std::to_string(p.index) + " is not live");
                return *ancilla_[p.index];
            case PatchRole::Magic:
                if (p.index >= magic_.size() || !magic_[p.index].live)
                    throw std::logic_error("magic state " + std::to_string(p.index) + " has not been requested");
                return layout_.distillation_anchor();
        }
        return {};
    }

    std::optional<Cell> free_ancilla_neighbour(Cell c) const {
        for (const Cell n : layout_.neighbours(c)) {
            if (layout_.kind(n) == CellKind::AncillaRoute && !occupied_[layout_.index(n)])
                return n;
        }
        return std::nullopt;
    }

    void set_orientation(std::size_t qubit, std::size_t from, const PatchOrientation& o) {
        orientation_[qubit] = o;
        auto& line = timeline_[qubit];
        if (line.back().first == from)
            line.back().second = o;
        else
            line.push_back({from, o});
    }

    void rotate(std::size_t trigger, std::size_t qubit, Cell helper) {
        const Cell cell = layout_.qubit_cell(qubit);
        const auto start = advance(trigger, config_.rotation_steps, {helper}, {cell});
        set_orientation(qubit, start, orientation_[qubit].rotated());
        record(trigger, SurgeryOpKind::RotatePatch, start, config_.rotation_steps, cell, {helper});
    }

    // Rotates a data patch so that `needed` faces `towards`, borrowing `helper`
    // (or any free neighbouring ancilla) for the rotation.
    void orient(std::size_t trigger, std::size_t qubit, Cell towards, BoundaryType needed,
                std::optional<Cell> helper = std::nullopt) {
        const Cell cell = layout_.qubit_cell(qubit);
        const auto [ignored, needs_rotation] =
            ensure_orientation(orientation_[qubit], facing_side(cell, towards), needed);
        if (!needs_rotation)
            return;
        if (!helper)
            helper = free_ancilla_neighbour(cell);
        if (!helper)
            throw ScheduleError(trigger, "no free ancilla next to qubit " + std::to_string(qubit) + " for a rotation");
        rotate(trigger, qubit, *helper);
    }

    void process(std::size_t i, const SurgeryOp& op) {
        switch (op.kind) {
            case SurgeryOpKind::InitAncillaPlus:
            case SurgeryOpKind::InitAncillaZero: init_ancilla(i, op); break;
            case SurgeryOpKind::MeasureZZ:
            case SurgeryOpKind::MeasureXX: measure_pair(i, op); break;
            case SurgeryOpKind::MeasurePatchZ:
            case SurgeryOpKind::MeasurePatchX: measure_patch(i, op); break;
            case SurgeryOpKind::DirectH: {
                const Cell cell = cell_of(op.first);
                const auto start = advance(i, 1, {}, {cell});
                if (op.first.role == PatchRole::Data)
                    set_orientation(op.first.index, start, apply_direct_h(orientation_[op.first.index]));
                record(i, op.kind, start, 1, cell);
                break;
            }
            case SurgeryOpKind::DirectS:
            case SurgeryOpKind::ConditionalS: {
                const Cell cell = cell_of(op.first);
                record(i, op.kind, advance(i, config_.s_steps, {}, {cell}), config_.s_steps, cell);
                break;
            }
            case SurgeryOpKind::RequestMagicState: request_magic(i, op); break;
            case SurgeryOpKind::RotatePatch: {
                if (op.first.role != PatchRole::Data)
                    throw ScheduleError(i, "only data patches are rotated");
                const Cell cell = cell_of(op.first);
                const auto helper = free_ancilla_neighbour(cell);
                if (!helper)
                    throw ScheduleError(i, "no free ancilla next to the rotated patch");
                rotate(i, op.first.index, *helper);
                break;
            }
            case SurgeryOpKind::TrackPauliX:
            case SurgeryOpKind::TrackPauliZ:
            case SurgeryOpKind::ConditionalPauli: record(i, op.kind, now(), 0, cell_of(op.first)); break;
        }
    }

    void init_ancilla(std::size_t i, const SurgeryOp& op) {
        if (op.first.role != PatchRole::Ancilla || op.first.index >= ancilla_.size())
            throw ScheduleError(i, "initialisation of a patch that is not an ancilla");

        // Joint measurements on this ancilla until it is measured out.
        std::vector<std::tuple<SurgeryOpKind, PatchId, std::size_t>> partners;
        for (std::size_t j = i + 1; j < program_.ops.size(); ++j) {
            const auto& next = program_.ops[j];
            if (next.first == op.first && !next.is_two_patch_measurement() && next.is_measurement())
                break;
            if (!next.is_two_patch_measurement())
                continue;
            if (next.first == op.first)
                partners.push_back({next.kind, next.second, j});
            else if (next.second == op.first)
                partners.push_back({next.kind, next.first, j});
        }
        auto partner_cell = [this](PatchId p) {
            return p.role == PatchRole::Magic ? layout_.distillation_anchor() : cell_of(p);
        };

        std::optional<Cell> place;
        if (partners.empty()) {
            for (std::size_t k = 0; k < layout_.footprint() && !place; ++k) {
                if (layout_.kinds()[k] == CellKind::AncillaRoute && !occupied_[k])
                    place = layout_.cell_at(k);
            }
        } else {
            const Cell first = partner_cell(std::get<1>(partners.front()));
            const Cell last = partner_cell(std::get<1>(partners.back()));
            if (first != last) {
                try {
                    const auto path = astar_route(layout_, first, last, occupied_);
                    place = path.cells.empty() ? free_ancilla_neighbour(last) : path.cells.back();
                } catch (const NoRoute& e) {
                    throw ScheduleError(i, e.what());
                }
            } else {
                place = free_ancilla_neighbour(last);
            }
        }
        if (!place)
            throw ScheduleError(i, "no free ancilla cell for ancilla " + std::to_string(op.first.index));

        // A partner that touches the chosen cell can only rotate while the cell
        // is still free.
        std::vector<PatchId> seen;
        for (const auto& [kind, partner, j] : partners) {
            if (partner.role != PatchRole::Data || std::find(seen.begin(), seen.end(), partner) != seen.end())
                continue;
            seen.push_back(partner);
            if (adjacent(cell_of(partner), *place))
                orient(j, partner.index, *place, required_boundary(kind), *place);
        }

        occupied_[layout_.index(*place)] = true;
        ancilla_[op.first.index] = *place;
        live_.push_back({*place, now(), kNone, i});
        live_of_ancilla_.resize(std::max(live_of_ancilla_.size(), ancilla_.size()), kNone);
        live_of_ancilla_[op.first.index] = live_.size() - 1;
        record(i, op.kind, now(), 0, *place);
    }

    void measure_pair(std::size_t i, const SurgeryOp& op) {
        const Cell a = cell_of(op.first);
        const Cell b = cell_of(op.second);
        RoutePath path;
        try {
            path = astar_route(layout_, a, b, occupied_);
        } catch (const NoRoute& e) {
            throw ScheduleError(i, e.what());
        }
        const BoundaryType needed = required_boundary(op.kind);
        if (op.first.role == PatchRole::Data)
            orient(i, op.first.index, path.cells.empty() ? b : path.cells.front(), needed);
        if (op.second.role == PatchRole::Data)
            orient(i, op.second.index, path.cells.empty() ? a : path.cells.back(), needed);

        std::vector<Cell> active;
        for (const auto& [p, c] : {std::pair{op.first, a}, std::pair{op.second, b}}) {
            if (p.role == PatchRole::Data)
                active.push_back(c);
        }
        record(i, op.kind, advance(i, 1, path.cells, active), 1, std::nullopt, path.cells);
    }

    void measure_patch(std::size_t i, const SurgeryOp& op) {
        const Cell cell = cell_of(op.first);
        const std::vector<Cell> active =
            op.first.role == PatchRole::Data ? std::vector<Cell>{cell} : std::vector<Cell>{};
        record(i, op.kind, advance(i, 1, {}, active), 1, cell);
        if (op.first.role == PatchRole::Ancilla) {
            occupied_[layout_.index(cell)] = false;
            live_[live_of_ancilla_[op.first.index]].to = now();
            ancilla_[op.first.index].reset();
        } else if (op.first.role == PatchRole::Magic) {
            auto& slot = magic_[op.first.index];
            slot.live = false;
            slot.release = now();
            if (slot.ordinal + 1 < requests_.size())
                distillation_start_[slot.ordinal + 1] = now();
        }
    }

    void request_magic(std::size_t i, const SurgeryOp& op) {
        if (op.first.role != PatchRole::Magic || op.first.index >= magic_.size())
            throw ScheduleError(i, "magic state request for a non-magic patch");
        const auto ordinal = next_request_++;
        const auto start = distillation_start_[ordinal];
        if (start == kNone)
            throw ScheduleError(i, "previous magic state is still held at the distillation output");
        const auto ready = start + config_.distillation_steps;
        if (now() < ready)
            advance(kNone, ready - now(), {}, {});
        auto& slot = magic_[op.first.index];
        slot = {ordinal, ready, kNone, true};
        record(i, op.kind, now(), 0, layout_.distillation_anchor());
    }

    Assembly finalize() {
        Assembly out;
        out.layout = layout_;
        out.num_steps = steps_.size();
        for (std::size_t r = 0; r < requests_.size(); ++r) {
            if (distillation_start_[r] != kNone)
                out.distillations.push_back({requests_[r], distillation_start_[r], config_.distillation_steps});
        }
        for (const auto& d : out.distillations)
            out.num_steps = std::max(out.num_steps, d.start + d.duration);
        out.schedule = std::move(schedule_);

        const auto footprint = layout_.footprint();
        const auto steps = out.num_steps;
        out.cuboids.resize(footprint * steps);
        for (std::size_t t = 0; t < steps; ++t) {
            for (std::size_t k = 0; k < footprint; ++k) {
                auto& c = out.cuboids[t * footprint + k];
                const Cell cell = layout_.cell_at(k);
                c.x = cell.x;
                c.y = cell.y;
                c.t = t;
            }
        }
        auto at = [&](std::size_t t, Cell c) -> Cuboid& { return out.cuboids[t * footprint + layout_.index(c)]; };
        auto owner = [&](std::size_t t) {
            return t < steps_.size() && steps_[t].owner != kNone ? std::optional(steps_[t].owner) : std::nullopt;
        };

        for (std::size_t q = 0; q < layout_.num_qubits(); ++q) {
            const Cell cell = layout_.qubit_cell(q);
            const auto& line = timeline_[q];
            std::size_t next = 0;
            for (std::size_t t = 0; t < steps; ++t) {
                while (next + 1 < line.size() && line[next + 1].first <= t)
                    ++next;
                auto& c = at(t, cell);
                c.kind = CuboidKind::DataIdle;
                c.sides = line[next].second.sides;
            }
        }
        for (const auto& d : out.distillations) {
            for (std::size_t t = d.start; t < std::min(steps, d.start + d.duration); ++t) {
                for (std::size_t k = 0; k < footprint; ++k) {
                    if (layout_.kinds()[k] == CellKind::Distillation) {
                        auto& c = out.cuboids[t * footprint + k];
                        c.kind = CuboidKind::DistillationActive;
                        c.op = d.request;
                    }
                }
            }
        }
        for (const auto& slot : magic_) {
            if (slot.ordinal == kNone)
                continue;
            for (std::size_t t = slot.ready; t < std::min(steps, slot.release); ++t) {
                auto& c = at(t, layout_.distillation_anchor());
                c.kind = CuboidKind::MagicBuffer;
                c.op = requests_[slot.ordinal];
            }
        }
        for (const auto& live : live_) {
            for (std::size_t t = live.from; t < std::min(steps, live.to); ++t) {
                auto& c = at(t, live.cell);
                c.kind = CuboidKind::RouteActive;
                c.op = owner(t).value_or(live.op);
            }
        }
        for (std::size_t t = 0; t < steps_.size(); ++t) {
            for (const Cell cell : steps_[t].route) {
                auto& c = at(t, cell);
                c.kind = CuboidKind::RouteActive;
                c.op = steps_[t].owner;
            }
            for (const Cell cell : steps_[t].active_data) {
                auto& c = at(t, cell);
                c.kind = CuboidKind::DataActive;
                c.op = steps_[t].owner;
            }
        }
        return out;
    }

    const LoweredProgram& program_;
    const LayoutGrid& layout_;
    const ScheduleConfig& config_;

    std::vector<StepRecord> steps_;
    std::vector<ScheduledOp> schedule_;
    std::vector<bool> occupied_;
    std::vector<std::optional<Cell>> ancilla_;
    std::vector<LiveInterval> live_;
    std::vector<std::size_t> live_of_ancilla_;
    std::vector<PatchOrientation> orientation_;
    std::vector<std::vector<std::pair<std::size_t, PatchOrientation>>> timeline_;

    std::vector<std::size_t> requests_;
    std::vector<std::size_t> distillation_start_;
    std::vector<MagicSlot> magic_;
    std::size_t next_request_{0};
};

}  // namespace

std::string_view to_string(CuboidKind kind) {
    for (const auto& [k, name] : kCuboidKindNames) {
        if (k == kind)
            return name;
    }
    return "?";
}

std::optional<CuboidKind> cuboid_kind_from_string(std::string_view text) {
    for (const auto& [k, name] : kCuboidKindNames) {
        if (name == text)
            return k;
    }
    return std::nullopt;
}

std::size_t assembly_volume(const Assembly& assembly) { return assembly.volume(); }

void ScheduleConfig::validate() const {
    if (rotation_steps < 1 || s_steps < 1)
        throw std::invalid_argument("rotation and S durations must be at least one step");
}

ScheduleError::ScheduleError(std::size_t instruction, const std::string& what)
    : std::runtime_error("instruction " + std::to_string(instruction) + ": " + what), instruction_(instruction) {}

Assembly schedule(const LoweredProgram& program, const LayoutGrid& layout, const ScheduleConfig& config) {
    config.validate();
    return Scheduler(program, layout, config).run();
}

}  // namespace latsurg
