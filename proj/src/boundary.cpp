#include "latsurg/boundary.hpp"

namespace latsurg {

bool PatchOrientation::valid() const {
    return sides[0] == sides[2] && sides[1] == sides[3] && sides[0] != sides[1];
}

PatchOrientation PatchOrientation::rotated() const {
    // Quarter turn clockwise: what faced N now faces E, and so on.
    PatchOrientation out;
    for (std::size_t s = 0; s < 4; ++s)
        out.sides[(s + 1) % 4] = sides[s];
    return out;
}

BoundaryType required_boundary(SurgeryOpKind kind) {
    switch (kind) {
        case SurgeryOpKind::MeasureZZ: return BoundaryType::Z;
        case SurgeryOpKind::MeasureXX: return BoundaryType::X;
        default: throw BoundaryError("required_boundary: " + to_string(kind) + " is not a two-patch measurement");
    }
}

std::pair<PatchOrientation, bool> ensure_orientation(const PatchOrientation& p, Side side, BoundaryType needed) {
    if (!p.valid())
        throw BoundaryError("ensure_orientation: invalid orientation");
    if (p.at(side) == needed)
        return {p, false};
    return {p.rotated(), true};
}

PatchOrientation apply_direct_h(const PatchOrientation& p) {
    PatchOrientation out;
    for (std::size_t s = 0; s < 4; ++s)
        out.sides[s] = toggled(p.sides[s]);
    return out;
}

Side facing_side(Cell from, Cell to) {
    if (!adjacent(from, to))
        throw BoundaryError("facing_side: cells are not adjacent");
    if (to.y < from.y)
        return Side::N;
    if (to.x > from.x)
        return Side::E;
    if (to.y > from.y)
        return Side::S;
    return Side::W;
}

}  // namespace latsurg
