#ifndef LATSURG_ROUTER_HPP
#define LATSURG_ROUTER_HPP

#include "latsurg/layout.hpp"

#include <stdexcept>
#include <vector>

namespace latsurg {

class NoRoute : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Interior cells of a merge region; the two merged patches are not included.
// Empty when the patches touch.
struct RoutePath {
    std::vector<Cell> cells;
    bool operator==(const RoutePath&) const = default;
};

// Plain passability grid, row-major.
struct RouteGrid {
    std::size_t width{0};
    std::size_t height{0};
    std::vector<bool> passable;
};

// A* from src to dst over passable cells, unit costs, Manhattan heuristic.
// Among equal priorities the cell with smaller (y, x) is expanded first.
// Throws NoRoute when dst cannot be reached.
RoutePath astar_route(const RouteGrid& grid, Cell src, Cell dst);

// Routes through free AncillaRoute cells. `occupied` is indexed like
// LayoutGrid::kinds() and may be empty.
RoutePath astar_route(const LayoutGrid& grid, Cell src, Cell dst, const std::vector<bool>& occupied = {});

}  // namespace latsurg

#endif  // LATSURG_ROUTER_HPP
