#include "thinpoly/intervals.hpp"

#include <algorithm>
#include <map>

#include "thinpoly/grid.hpp"

namespace thinpoly {

bool InnerInterval::contains(Cell c) const {
    return std::find(cells.begin(), cells.end(), c) != cells.end();
}

namespace {

// All maximal runs in one direction, cells ordered along the run.
std::vector<InnerInterval> runs(const CellSet& p, Orientation o) {
    std::vector<InnerInterval> out;
    for (const Cell& c : p) {
        Cell before = o == Orientation::horizontal ? Cell{c.x - 1, c.y} : Cell{c.x, c.y - 1};
        if (p.contains(before)) continue;  // not the start of a run
        InnerInterval run{o, {}};
        Cell cur = c;
        while (p.contains(cur)) {
            run.cells.push_back(cur);
            cur = o == Orientation::horizontal ? Cell{cur.x + 1, cur.y} : Cell{cur.x, cur.y + 1};
        }
        out.push_back(std::move(run));
    }
    return out;
}

bool subset_of(const std::vector<Cell>& a, const std::vector<Cell>& b) {
    for (const Cell& c : a)
        if (std::find(b.begin(), b.end(), c) == b.end()) return false;
    return true;
}

}  // namespace

std::vector<InnerInterval> maximal_inner_intervals(const CellSet& p) {
    if (!is_polyomino(p)) throw domain_error("maximal_inner_intervals requires a polyomino");
    std::vector<InnerInterval> all = runs(p, Orientation::horizontal);
    for (InnerInterval& v : runs(p, Orientation::vertical)) all.push_back(std::move(v));

    std::vector<InnerInterval> out;
    for (size_t i = 0; i < all.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < all.size() && keep; ++j) {
            if (i == j) continue;
            if (all[i].cells.size() < all[j].cells.size() && subset_of(all[i].cells, all[j].cells))
                keep = false;
            // A one-cell run exists in both directions; keep the horizontal one.
            if (all[i].cells == all[j].cells && all[i].orientation == Orientation::vertical)
                keep = false;
        }
        if (keep) out.push_back(all[i]);
    }
    std::sort(out.begin(), out.end(), [](const InnerInterval& a, const InnerInterval& b) {
        if (a.cells != b.cells) return a.cells < b.cells;
        return a.orientation < b.orientation;
    });
    return out;
}

std::vector<InnerInterval> intervals_containing(const CellSet& p, Cell c) {
    if (!p.contains(c)) throw domain_error("cell " + to_string(c) + " not in the set");
    std::vector<InnerInterval> out;
    for (InnerInterval& i : maximal_inner_intervals(p))
        if (i.contains(c)) out.push_back(std::move(i));
    return out;
}

std::vector<Cell> single_cells(const CellSet& p) {
    std::map<Cell, int> count;
    for (const InnerInterval& i : maximal_inner_intervals(p))
        for (const Cell& c : i.cells) ++count[c];
    std::vector<Cell> out;
    for (const auto& [c, n] : count)
        if (n == 1) out.push_back(c);
    return out;
}

std::vector<Cell> end_cells(const InnerInterval& i) {
    if (i.cells.empty()) throw domain_error("empty interval has no end-cells");
    if (i.cells.size() == 1) return {i.cells.front()};
    std::vector<Cell> out{i.cells.front(), i.cells.back()};
    std::sort(out.begin(), out.end());
    return out;
}

bool has_s_property(const CellSet& p) {
    if (!is_polyomino(p) || !is_simple(p) || !is_thin(p))
        throw domain_error("the S-property is defined for simple thin polyominoes only");
    std::vector<Cell> singles = single_cells(p);
    for (const InnerInterval& i : maximal_inner_intervals(p)) {
        int n = 0;
        for (const Cell& c : i.cells)
            if (std::binary_search(singles.begin(), singles.end(), c)) ++n;
        if (n != 1) return false;
    }
    return true;
}

}  // namespace thinpoly
