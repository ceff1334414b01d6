#include "thinpoly/rook.hpp"

#include <algorithm>
#include <map>

#include "thinpoly/grid.hpp"

namespace thinpoly {

namespace {

// Per-cell indices of its maximal horizontal and vertical run. Two cells
// attack iff they share either index; gaps split runs, so this is exactly
// visibility inside a common inner interval.
struct RunIndex {
    std::vector<int> hrun, vrun;  // aligned with p.cells()
    int hcount = 0, vcount = 0;

    explicit RunIndex(const CellSet& p) {
        std::map<Cell, int> pos;
        int idx = 0;
        for (const Cell& c : p) pos[c] = idx++;
        hrun.assign(pos.size(), -1);
        vrun.assign(pos.size(), -1);
        for (const Cell& c : p) {
            if (!p.contains({c.x - 1, c.y})) {
                int id = hcount++;
                for (Cell cur = c; p.contains(cur); cur.x++) hrun[pos[cur]] = id;
            }
            if (!p.contains({c.x, c.y - 1})) {
                int id = vcount++;
                for (Cell cur = c; p.contains(cur); cur.y++) vrun[pos[cur]] = id;
            }
        }
    }
};

// Depth-first enumeration over cells in canonical order with incrementally
// maintained used-run flags. `skip` masks forbidden cells while the run
// structure of the full set stays in force.
struct Backtracker {
    const std::vector<Cell>& cells;
    RunIndex runs;
    std::vector<char> skip;
    std::vector<char> hused, vused;

    explicit Backtracker(const CellSet& p)
        : cells(p.cells()), runs(p), skip(cells.size(), 0),
          hused(runs.hcount, 0), vused(runs.vcount, 0) {}

    void count(size_t from, int placed, std::vector<std::int64_t>& counts) {
        if (placed >= static_cast<int>(counts.size())) counts.resize(placed + 1, 0);
        ++counts[placed];
        for (size_t i = from; i < cells.size(); ++i) {
            if (skip[i] || hused[runs.hrun[i]] || vused[runs.vrun[i]]) continue;
            hused[runs.hrun[i]] = vused[runs.vrun[i]] = 1;
            count(i + 1, placed + 1, counts);
            hused[runs.hrun[i]] = vused[runs.vrun[i]] = 0;
        }
    }

    void collect(size_t from, std::vector<Cell>& cur, int want,
                 std::vector<RookConfig>& out) {
        if (static_cast<int>(cur.size()) == want) {
            out.push_back({cur});
            return;
        }
        for (size_t i = from; i < cells.size(); ++i) {
            if (skip[i] || hused[runs.hrun[i]] || vused[runs.vrun[i]]) continue;
            hused[runs.hrun[i]] = vused[runs.vrun[i]] = 1;
            cur.push_back(cells[i]);
            collect(i + 1, cur, want, out);
            cur.pop_back();
            hused[runs.hrun[i]] = vused[runs.vrun[i]] = 0;
        }
    }
};

}  // namespace

bool attacks(const CellSet& p, Cell c1, Cell c2) {
    if (!p.contains(c1)) throw domain_error("cell " + to_string(c1) + " not in the set");
    if (!p.contains(c2)) throw domain_error("cell " + to_string(c2) + " not in the set");
    if (c1 == c2) return false;
    if (c1.y == c2.y) {
        for (int x = std::min(c1.x, c2.x);; ++x) {
            if (!p.contains({x, c1.y})) break;
            if (x == std::max(c1.x, c2.x)) return true;
        }
    }
    if (c1.x == c2.x) {
        for (int y = std::min(c1.y, c2.y);; ++y) {
            if (!p.contains({c1.x, y})) break;
            if (y == std::max(c1.y, c2.y)) return true;
        }
    }
    return false;
}

IntPolynomial rook_polynomial(const CellSet& p) {
    if (p.empty()) return IntPolynomial::constant(1);
    Backtracker bt(p);
    std::vector<std::int64_t> counts;
    bt.count(0, 0, counts);
    return IntPolynomial(std::move(counts));
}

int rook_number(const CellSet& p) {
    if (p.empty()) return 0;
    return rook_polynomial(p).degree();
}

IntPolynomial restricted_rook_polynomial(const CellSet& p, const std::vector<Cell>& forbidden) {
    for (const Cell& c : forbidden)
        if (!p.contains(c)) throw domain_error("forbidden cell " + to_string(c) + " not in the set");
    if (p.empty()) return IntPolynomial::constant(1);
    Backtracker bt(p);
    for (const Cell& c : forbidden) {
        size_t i = std::lower_bound(p.cells().begin(), p.cells().end(), c) - p.cells().begin();
        bt.skip[i] = 1;
    }
    std::vector<std::int64_t> counts;
    bt.count(0, 0, counts);
    return IntPolynomial(std::move(counts));
}

IntPolynomial rook_polynomial_through(const CellSet& p, Cell c) {
    if (!p.contains(c)) throw domain_error("cell " + to_string(c) + " not in the set");
    return rook_polynomial(p) - restricted_rook_polynomial(p, {c});
}

std::vector<RookConfig> max_rook_configs(const CellSet& p) {
    if (!is_polyomino(p)) throw domain_error("max_rook_configs requires a polyomino");
    int r = rook_number(p);
    Backtracker bt(p);
    std::vector<RookConfig> out;
    std::vector<Cell> cur;
    bt.collect(0, cur, r, out);
    return out;
}

}  // namespace thinpoly
