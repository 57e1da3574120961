#include "latsurg/router.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

namespace latsurg {

namespace {

std::string cell_text(Cell c) { return "(" + std::to_string(c.x) + ", " + std::to_string(c.y) + ")"; }

}  // namespace

RoutePath astar_route(const RouteGrid& grid, Cell src, Cell dst) {
    if (src == dst)
        throw NoRoute("route endpoints coincide at " + cell_text(src));
    if (grid.passable.size() != grid.width * grid.height)
        throw NoRoute("route grid size mismatch");
    if (adjacent(src, dst))
        return {};

    auto in_bounds = [&](Cell c) {
        return c.x >= 0 && c.y >= 0 && static_cast<std::size_t>(c.x) < grid.width &&
               static_cast<std::size_t>(c.y) < grid.height;
    };
    auto index = [&](Cell c) { return static_cast<std::size_t>(c.y) * grid.width + static_cast<std::size_t>(c.x); };
    auto open_cell = [&](Cell c) { return in_bounds(c) && c != src && c != dst && grid.passable[index(c)]; };
    auto neighbours = [](Cell c) {
        return std::array<Cell, 4>{Cell{c.x, c.y - 1}, Cell{c.x + 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x - 1, c.y}};
    };

    constexpr int kUnseen = std::numeric_limits<int>::max();
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::vector<int> g(grid.passable.size(), kUnseen);
    std::vector<std::size_t> parent(grid.passable.size(), kNone);
    std::vector<bool> closed(grid.passable.size(), false);

    // (f, y, x, g)
    using Entry = std::tuple<int, int, int, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    auto h = [&](Cell c) { return manhattan(c, dst) - 1; };

    for (const Cell n : neighbours(src)) {
        if (open_cell(n) && g[index(n)] > 1) {
            g[index(n)] = 1;
            open.emplace(1 + h(n), n.y, n.x, 1);
        }
    }

    while (!open.empty()) {
        const auto [f, y, x, cost] = open.top();
        open.pop();
        const Cell c{x, y};
        const auto ci = index(c);
        if (closed[ci] || cost != g[ci])
            continue;
        closed[ci] = true;
        if (adjacent(c, dst)) {
            RoutePath path;
            for (auto i = ci; i != kNone; i = parent[i])
                path.cells.push_back({static_cast<int>(i % grid.width), static_cast<int>(i / grid.width)});
            std::reverse(path.cells.begin(), path.cells.end());
            return path;
        }
        for (const Cell n : neighbours(c)) {
            if (!open_cell(n))
                continue;
            const auto ni = index(n);
            if (!closed[ni] && cost + 1 < g[ni]) {
                g[ni] = cost + 1;
                parent[ni] = ci;
                open.emplace(cost + 1 + h(n), n.y, n.x, cost + 1);
            }
        }
    }
    throw NoRoute("no free ancilla path from " + cell_text(src) + " to " + cell_text(dst));
}

RoutePath astar_route(const LayoutGrid& grid, Cell src, Cell dst, const std::vector<bool>& occupied) {
    for (const Cell endpoint : {src, dst}) {
        if (!grid.in_bounds(endpoint))
            throw NoRoute("route endpoint " + cell_text(endpoint) + " is outside the layout");
        if (grid.kind(endpoint) == CellKind::Unused)
            throw NoRoute("route endpoint " + cell_text(endpoint) + " is an unused cell");
    }
    RouteGrid view{grid.width(), grid.height(), std::vector<bool>(grid.footprint(), false)};
    for (std::size_t i = 0; i < grid.footprint(); ++i)
        view.passable[i] = grid.kinds()[i] == CellKind::AncillaRoute && (occupied.empty() || !occupied[i]);
    return astar_route(view, src, dst);
}

}  // namespace latsurg
