// Unit cells on the integer grid and finite sets of them.
//
// A cell is the closed unit square [x,x+1] x [y,y+1], named by its lower-left
// corner. A CellSet is a finite duplicate-free set of cells kept in canonical
// (lexicographic) order, so equal sets compare equal as vectors and every
// listing derived from one is deterministic.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "thinpoly/errors.hpp"

namespace thinpoly {

struct Cell {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A lattice point; corners of cells double as polynomial ring variables.
struct Vertex {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(Cell c);

class CellSet {
public:
    CellSet() = default;

    // Sorts the cells; duplicates are a caller bug and rejected.
    explicit CellSet(std::vector<Cell> cells);

    bool contains(Cell c) const;
    bool empty() const { return cells_.empty(); }
    int size() const { return static_cast<int>(cells_.size()); }

    const std::vector<Cell>& cells() const { return cells_; }
    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }

    int min_x() const;
    int min_y() const;
    int max_x() const;
    int max_y() const;

    CellSet translated(int dx, int dy) const;
    // Translates so that min x = 0 and min y = 0.
    CellSet normalized() const;
    bool is_normalized() const;

    CellSet without(Cell c) const;
    CellSet without(const std::vector<Cell>& cs) const;
    CellSet with(Cell c) const;

    friend auto operator<=>(const CellSet&, const CellSet&) = default;

private:
    std::vector<Cell> cells_;  // sorted, unique
};

// The 8 symmetries of the square lattice, acting on cells (index 0..7:
// rotations by 0/90/180/270 degrees, then the same four after an x-mirror).
Cell transform_cell(Cell c, int sym);
CellSet transformed(const CellSet& p, int sym);

}  // namespace thinpoly
