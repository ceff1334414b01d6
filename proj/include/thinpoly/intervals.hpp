// Inner intervals, maximal inner intervals, single cells, end-cells and the
// S-property.
#pragma once

#include <vector>

#include "thinpoly/cell.hpp"

namespace thinpoly {

enum class Orientation { horizontal, vertical };

// A contiguous run of cells in one row or one column, listed in increasing
// coordinate along the run. Two intervals are equal when their cell sets are;
// a one-cell interval carries the horizontal tag by convention.
struct InnerInterval {
    Orientation orientation = Orientation::horizontal;
    std::vector<Cell> cells;  // ordered along the run

    bool contains(Cell c) const;
    Cell first() const { return cells.front(); }
    Cell last() const { return cells.back(); }
    int size() const { return static_cast<int>(cells.size()); }

    friend bool operator==(const InnerInterval& a, const InnerInterval& b) {
        return a.cells == b.cells;
    }
};

// All maximal horizontal and vertical runs, minus runs strictly contained in
// another run's cell set, in canonical order. Requires is_polyomino.
std::vector<InnerInterval> maximal_inner_intervals(const CellSet& p);

// The maximal inner intervals whose cell set contains c.
std::vector<InnerInterval> intervals_containing(const CellSet& p, Cell c);

// Cells lying in exactly one maximal inner interval.
std::vector<Cell> single_cells(const CellSet& p);

// The extreme cells of a run; both coincide for a one-cell interval.
std::vector<Cell> end_cells(const InnerInterval& i);

// Every maximal inner interval has exactly one single cell. Defined for
// simple thin polyominoes only; other inputs raise domain_error.
bool has_s_property(const CellSet& p);

}  // namespace thinpoly
