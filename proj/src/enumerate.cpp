#include "thinpoly/enumerate.hpp"

#include <algorithm>
#include <set>

#include "thinpoly/grid.hpp"
#include "thinpoly/intervals.hpp"

namespace thinpoly {

namespace {

// Growth enumeration. Cells are explored relative to a seed at the origin;
// the half-plane rule (y > 0, or y == 0 and x >= 0) makes the seed the
// lexicographically least cell of every shape in reading order, so each fixed
// polyomino is produced from exactly one seed position. A cell that enters
// the untried list is never offered again on the same branch, which is what
// rules out duplicates.
struct Grower {
    int n;
    const std::function<void(const CellSet&)>& emit;
    std::vector<Cell> poly;
    std::set<Cell> seen;

    static bool allowed(Cell c) { return c.y > 0 || (c.y == 0 && c.x >= 0); }

    void grow(std::vector<Cell> untried) {
        while (!untried.empty()) {
            Cell c = untried.back();
            untried.pop_back();
            poly.push_back(c);
            if (static_cast<int>(poly.size()) == n) {
                emit(CellSet(poly).normalized());
            } else {
                std::vector<Cell> added;
                for (Cell nb : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1},
                                Cell{c.x, c.y - 1}}) {
                    if (!allowed(nb) || seen.count(nb)) continue;
                    seen.insert(nb);
                    added.push_back(nb);
                }
                std::vector<Cell> next = untried;
                next.insert(next.end(), added.begin(), added.end());
                grow(std::move(next));
                for (Cell nb : added) seen.erase(nb);
            }
            poly.pop_back();
        }
    }
};

}  // namespace

void fixed_polyominoes(int n, const std::function<void(const CellSet&)>& emit) {
    if (n < 1) throw domain_error("cell count must be at least 1");
    Grower g{n, emit, {}, {Cell{0, 0}}};
    g.grow({Cell{0, 0}});
}

std::vector<CellSet> fixed_polyominoes(int n) {
    std::vector<CellSet> out;
    fixed_polyominoes(n, [&](const CellSet& p) { out.push_back(p); });
    return out;
}

namespace {

void combinations(int total, int choose, std::vector<int>& pick,
                  const std::function<void(const std::vector<int>&)>& fn, int from = 0) {
    if (static_cast<int>(pick.size()) == choose) {
        fn(pick);
        return;
    }
    int need = choose - static_cast<int>(pick.size());
    for (int i = from; i <= total - need; ++i) {
        pick.push_back(i);
        combinations(total, choose, pick, fn, i + 1);
        pick.pop_back();
    }
}

}  // namespace

std::vector<CellSet> fixed_polyominoes_naive(int n) {
    if (n < 1) throw domain_error("cell count must be at least 1");
    // Every normalized n-cell polyomino fits in the n x n box with a cell on
    // each of the two low edges.
    std::vector<CellSet> out;
    std::vector<int> pick;
    combinations(n * n, n, pick, [&](const std::vector<int>& sel) {
        std::vector<Cell> cells;
        cells.reserve(sel.size());
        for (int i : sel) cells.push_back({i % n, i / n});
        CellSet p{std::move(cells)};
        if (p.min_x() != 0 || p.min_y() != 0) return;
        if (!is_polyomino(p)) return;
        out.push_back(std::move(p));
    });
    return out;
}

bool passes_filters(const CellSet& p, const ClassFilters& f) {
    if (!f.simple && !f.thin && !f.s_property) return true;
    if ((f.simple || f.s_property) && !is_polyomino(p)) return false;
    if (f.simple && !is_simple(p)) return false;
    if (f.thin && !is_thin(p)) return false;
    if (f.s_property) {
        // Only defined on simple thin polyominoes; everything else drops out.
        if (!is_simple(p) || !is_thin(p)) return false;
        return has_s_property(p);
    }
    return true;
}

std::vector<CellSet> filter_class(const std::vector<CellSet>& in, const ClassFilters& f) {
    std::vector<CellSet> out;
    for (const CellSet& p : in)
        if (passes_filters(p, f)) out.push_back(p);
    return out;
}

std::vector<CellSet> dedup_up_to_symmetry(const std::vector<CellSet>& in) {
    std::vector<CellSet> out;
    for (const CellSet& p : in) {
        bool least = true;
        for (int sym = 1; sym < 8 && least; ++sym)
            if (transformed(p, sym).normalized() < p) least = false;
        if (least) out.push_back(p);
    }
    return out;
}

}  // namespace thinpoly
