#ifndef LATSURG_LAYOUT_HPP
#define LATSURG_LAYOUT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace latsurg {

struct Cell {
    int x{0};
    int y{0};
    bool operator==(const Cell&) const = default;
};

// Row-major order: y first, then x.
constexpr bool row_major_less(Cell a, Cell b) { return a.y != b.y ? a.y < b.y : a.x < b.x; }

constexpr int manhattan(Cell a, Cell b) {
    return (a.x > b.x ? a.x - b.x : b.x - a.x) + (a.y > b.y ? a.y - b.y : b.y - a.y);
}

constexpr bool adjacent(Cell a, Cell b) { return manhattan(a, b) == 1; }

enum class CellKind : std::uint8_t { Data, AncillaRoute, Distillation, Unused };

std::string_view to_string(CellKind kind);
std::optional<CellKind> cell_kind_from_string(std::string_view text);

class LayoutError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LayoutConfig {
    std::size_t data_row_width{8};
    std::size_t distillation_width{4};
    std::size_t distillation_height{2};

    void validate() const;
};

class LayoutGrid {
public:
    LayoutGrid() = default;
    // Throws LayoutError unless every structural invariant holds.
    LayoutGrid(std::size_t width, std::size_t height, std::vector<CellKind> kinds, std::vector<Cell> qubit_cells,
               Cell distillation_anchor);

    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }
    std::size_t footprint() const { return width_ * height_; }
    std::size_t num_qubits() const { return qubit_cells_.size(); }

    bool in_bounds(Cell c) const {
        return c.x >= 0 && c.y >= 0 && static_cast<std::size_t>(c.x) < width_ && static_cast<std::size_t>(c.y) < height_;
    }
    std::size_t index(Cell c) const { return static_cast<std::size_t>(c.y) * width_ + static_cast<std::size_t>(c.x); }
    Cell cell_at(std::size_t index) const {
        return {static_cast<int>(index % width_), static_cast<int>(index / width_)};
    }

    CellKind kind(Cell c) const { return kinds_[index(c)]; }
    const std::vector<CellKind>& kinds() const { return kinds_; }
    Cell qubit_cell(std::size_t qubit) const { return qubit_cells_.at(qubit); }
    const std::vector<Cell>& qubit_cells() const { return qubit_cells_; }
    Cell distillation_anchor() const { return anchor_; }

    std::size_t count(CellKind kind) const;

    // In-bounds 4-neighbours in N, E, S, W order.
    std::vector<Cell> neighbours(Cell c) const;

    bool operator==(const LayoutGrid&) const = default;

private:
    void check_invariants() const;

    std::size_t width_{0};
    std::size_t height_{0};
    std::vector<CellKind> kinds_;
    std::vector<Cell> qubit_cells_;
    Cell anchor_;
};

// Data patches sit in bands of (data row, ancilla row, data row) under a
// distillation block that shares its bottom row with the first data row.
// Consecutive ancilla rows are joined through a connector cell pair in column
// 0. Bands are filled column by column and each ancilla row is trimmed to the
// last column that still serves a data patch.
LayoutGrid build_layout(std::size_t num_qubits, const LayoutConfig& config = {});

struct AncillaGraph {
    std::vector<Cell> nodes;                        // row-major order
    std::vector<std::vector<std::size_t>> edges;    // adjacency lists into `nodes`

    std::size_t component_count() const;
};

AncillaGraph ancilla_graph(const LayoutGrid& grid);

}  // namespace latsurg

#endif  // LATSURG_LAYOUT_HPP
