#include "latsurg/layout.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <string>

namespace latsurg {

namespace {

constexpr std::array<std::pair<CellKind, std::string_view>, 4> kCellKindNames{{
    {CellKind::Data, "Data"},
    {CellKind::AncillaRoute, "AncillaRoute"},
    {CellKind::Distillation, "Distillation"},
    {CellKind::Unused, "Unused"},
}};

}  // namespace

std::string_view to_string(CellKind kind) {
    for (const auto& [k, name] : kCellKindNames) {
        if (k == kind)
            return name;
    }
    return "?";
}

std::optional<CellKind> cell_kind_from_string(std::string_view text) {
    for (const auto& [k, name] : kCellKindNames) {
        if (name == text)
            return k;
    }
    return std::nullopt;
}

void LayoutConfig::validate() const {
    if (data_row_width < 1 || distillation_width < 1 || distillation_height < 1)
        throw LayoutError("layout dimensions must all be at least 1");
}

LayoutGrid::LayoutGrid(std::size_t width, std::size_t height, std::vector<CellKind> kinds,
                       std::vector<Cell> qubit_cells, Cell distillation_anchor)
    : width_(width), height_(height), kinds_(std::move(kinds)), qubit_cells_(std::move(qubit_cells)),
      anchor_(distillation_anchor) {
    check_invariants();
}

std::size_t LayoutGrid::count(CellKind kind) const {
    return static_cast<std::size_t>(std::count(kinds_.begin(), kinds_.end(), kind));
}

std::vector<Cell> LayoutGrid::neighbours(Cell c) const {
    std::vector<Cell> out;
    out.reserve(4);
    for (const Cell n : {Cell{c.x, c.y - 1}, Cell{c.x + 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x - 1, c.y}}) {
        if (in_bounds(n))
            out.push_back(n);
    }
    return out;
}

void LayoutGrid::check_invariants() const {
    if (kinds_.size() != width_ * height_)
        throw LayoutError("cell kind matrix does not match the grid dimensions");

    auto touches_ancilla = [this](Cell c) {
        const auto ns = neighbours(c);
        return std::any_of(ns.begin(), ns.end(), [this](Cell n) { return kind(n) == CellKind::AncillaRoute; });
    };

    std::vector<bool> taken(kinds_.size(), false);
    for (std::size_t q = 0; q < qubit_cells_.size(); ++q) {
        const Cell c = qubit_cells_[q];
        if (!in_bounds(c) || kind(c) != CellKind::Data)
            throw LayoutError("qubit " + std::to_string(q) + " is not mapped to a data cell");
        if (taken[index(c)])
            throw LayoutError("two qubits share a data cell");
        taken[index(c)] = true;
        if (!touches_ancilla(c))
            throw LayoutError("data cell of qubit " + std::to_string(q) + " has no adjacent ancilla");
    }
    if (count(CellKind::Data) != qubit_cells_.size())
        throw LayoutError("data cell count differs from the qubit count");

    if (!in_bounds(anchor_) || kind(anchor_) != CellKind::Distillation)
        throw LayoutError("distillation anchor is not a distillation cell");
    if (!touches_ancilla(anchor_))
        throw LayoutError("distillation anchor has no adjacent ancilla");

    if (ancilla_graph(*this).component_count() > 1)
        throw LayoutError("ancilla cells are not connected");
}

LayoutGrid build_layout(std::size_t num_qubits, const LayoutConfig& config) {
    config.validate();
    if (num_qubits == 0)
        throw LayoutError("layout needs at least one qubit");

    const std::size_t width = std::max(config.data_row_width, config.distillation_width);
    const std::size_t dist_w = config.distillation_width;
    const std::size_t dist_h = config.distillation_height;

    // Band b: top data row, ancilla row, bottom data row. Column 0 of a data
    // row is reserved for a connector unless it is the last band's bottom row.
    auto top_capacity = [&](std::size_t band) { return band == 0 ? width - dist_w : width - 1; };
    std::size_t bands = 1;
    for (std::size_t remaining = num_qubits;; ++bands) {
        const std::size_t band = bands - 1;
        if (remaining <= top_capacity(band) + width)
            break;
        remaining -= top_capacity(band) + width - 1;
    }

    const std::size_t height = dist_h - 1 + 3 * bands;
    std::vector<CellKind> kinds(width * height, CellKind::Unused);
    auto at = [&](std::size_t x, std::size_t y) -> CellKind& { return kinds[y * width + x]; };

    for (std::size_t y = 0; y < dist_h; ++y) {
        for (std::size_t x = 0; x < dist_w; ++x)
            at(x, y) = CellKind::Distillation;
    }

    std::vector<Cell> qubit_cells;
    qubit_cells.reserve(num_qubits);
    for (std::size_t band = 0; band < bands; ++band) {
        const std::size_t top = dist_h - 1 + 3 * band;
        const std::size_t mid = top + 1;
        const std::size_t bottom = top + 2;
        const bool last = band + 1 == bands;

        std::size_t reach = 0;
        for (std::size_t x = 0; x < width && qubit_cells.size() < num_qubits; ++x) {
            const bool top_free = band == 0 ? x >= dist_w : x != 0;
            const bool bottom_free = last || x != 0;
            for (const auto& [free, y] : {std::pair{top_free, top}, std::pair{bottom_free, bottom}}) {
                if (!free || qubit_cells.size() == num_qubits)
                    continue;
                at(x, y) = CellKind::Data;
                qubit_cells.push_back({static_cast<int>(x), static_cast<int>(y)});
                reach = x;
            }
        }
        for (std::size_t x = 0; x <= reach; ++x)
            at(x, mid) = CellKind::AncillaRoute;
        if (band > 0) {
            at(0, top) = CellKind::AncillaRoute;
            at(0, top - 1) = CellKind::AncillaRoute;
        }
    }

    const Cell anchor{0, static_cast<int>(dist_h - 1)};
    return LayoutGrid(width, height, std::move(kinds), std::move(qubit_cells), anchor);
}

std::size_t AncillaGraph::component_count() const {
    std::vector<bool> seen(nodes.size(), false);
    std::size_t components = 0;
    for (std::size_t start = 0; start < nodes.size(); ++start) {
        if (seen[start])
            continue;
        ++components;
        std::queue<std::size_t> frontier;
        frontier.push(start);
        seen[start] = true;
        while (!frontier.empty()) {
            const auto n = frontier.front();
            frontier.pop();
            for (const auto m : edges[n]) {
                if (!seen[m]) {
                    seen[m] = true;
                    frontier.push(m);
                }
            }
        }
    }
    return components;
}

AncillaGraph ancilla_graph(const LayoutGrid& grid) {
    AncillaGraph graph;
    std::vector<std::size_t> node_of(grid.footprint(), SIZE_MAX);
    for (std::size_t i = 0; i < grid.footprint(); ++i) {
        if (grid.kinds()[i] == CellKind::AncillaRoute) {
            node_of[i] = graph.nodes.size();
            graph.nodes.push_back(grid.cell_at(i));
        }
    }
    graph.edges.resize(graph.nodes.size());
    for (std::size_t n = 0; n < graph.nodes.size(); ++n) {
        for (const Cell c : grid.neighbours(graph.nodes[n])) {
            const auto m = node_of[grid.index(c)];
            if (m != SIZE_MAX)
                graph.edges[n].push_back(m);
        }
    }
    return graph;
}

}  // namespace latsurg
