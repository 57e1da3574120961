// Breadth-first reference for route lengths on a passability grid.
#ifndef LATSURG_TESTS_BFS_HPP
#define LATSURG_TESTS_BFS_HPP

#include <cstdlib>
#include <deque>
#include <optional>
#include <vector>

namespace oracle {

// Number of passable cells on a shortest 4-connected walk that starts next to
// (sx, sy) and ends next to (dx, dy); 0 if the endpoints touch, nullopt if no
// walk exists. The endpoints themselves never count as passable.
inline std::optional<int> bfs_route_length(int w, int h, const std::vector<bool>& passable, int sx, int sy, int dx,
                                           int dy) {
    auto touches = [](int ax, int ay, int bx, int by) { return std::abs(ax - bx) + std::abs(ay - by) == 1; };
    if (touches(sx, sy, dx, dy))
        return 0;
    std::vector<int> dist(static_cast<std::size_t>(w * h), -1);
    std::deque<std::pair<int, int>> queue;
    const int moves[4][2] = {{0, -1}, {1, 0}, {0, 1}, {-1, 0}};
    auto open = [&](int x, int y) {
        return x >= 0 && y >= 0 && x < w && y < h && !(x == sx && y == sy) && !(x == dx && y == dy) &&
               passable[static_cast<std::size_t>(y * w + x)];
    };
    for (const auto& m : moves) {
        const int x = sx + m[0], y = sy + m[1];
        if (open(x, y)) {
            dist[static_cast<std::size_t>(y * w + x)] = 1;
            queue.push_back({x, y});
        }
    }
    while (!queue.empty()) {
        const auto [x, y] = queue.front();
        queue.pop_front();
        const int d = dist[static_cast<std::size_t>(y * w + x)];
        if (touches(x, y, dx, dy))
            return d;
        for (const auto& m : moves) {
            const int nx = x + m[0], ny = y + m[1];
            if (open(nx, ny) && dist[static_cast<std::size_t>(ny * w + nx)] < 0) {
                dist[static_cast<std::size_t>(ny * w + nx)] = d + 1;
                queue.push_back({nx, ny});
            }
        }
    }
    return std::nullopt;
}

}  // namespace oracle

#endif  // LATSURG_TESTS_BFS_HPP
