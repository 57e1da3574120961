#ifndef LATSURG_BOUNDARY_HPP
#define LATSURG_BOUNDARY_HPP

#include "latsurg/layout.hpp"
#include "latsurg/lowering.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace latsurg {

enum class BoundaryType : std::uint8_t { X, Z };

// Sides in grid terms: N is y - 1, E is x + 1, S is y + 1, W is x - 1.
enum class Side : std::uint8_t { N, E, S, W };

class BoundaryError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

constexpr char boundary_char(BoundaryType b) { return b == BoundaryType::X ? 'X' : 'Z'; }
constexpr BoundaryType toggled(BoundaryType b) { return b == BoundaryType::X ? BoundaryType::Z : BoundaryType::X; }

struct PatchOrientation {
    // Indexed by Side.
    std::array<BoundaryType, 4> sides{BoundaryType::Z, BoundaryType::X, BoundaryType::Z, BoundaryType::X};

    // Z on N/S, X on E/W.
    static PatchOrientation standard() { return {}; }

    BoundaryType at(Side s) const { return sides[static_cast<std::size_t>(s)]; }
    // Opposite sides equal, neighbouring sides different.
    bool valid() const;
    PatchOrientation rotated() const;

    bool operator==(const PatchOrientation&) const = default;
};

// Boundary that must face the merge region for a two-patch measurement.
BoundaryType required_boundary(SurgeryOpKind kind);

std::pair<PatchOrientation, bool> ensure_orientation(const PatchOrientation& p, Side side, BoundaryType needed);

// H exchanges the logical X and Z operators, so every side label flips.
PatchOrientation apply_direct_h(const PatchOrientation& p);

// Side of `from` that faces the adjacent cell `to`.
Side facing_side(Cell from, Cell to);

}  // namespace latsurg

#endif  // LATSURG_BOUNDARY_HPP
