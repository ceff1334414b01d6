// Independent brute-force oracles used by the tests. These deliberately avoid
// the library's run-index machinery: attacks are re-derived by scanning the
// grid and configurations are enumerated as raw bitmask subsets, so a bug in
// the production path cannot hide in its own oracle.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "thinpoly/cell.hpp"
#include "thinpoly/grid.hpp"
#include "thinpoly/polynomial.hpp"

namespace testing_oracles {

using thinpoly::Cell;
using thinpoly::CellSet;
using thinpoly::IntPolynomial;

inline bool naive_attacks(const CellSet& p, Cell a, Cell b) {
    if (a == b) return false;
    if (a.y == b.y) {
        bool ok = true;
        for (int x = std::min(a.x, b.x); x <= std::max(a.x, b.x); ++x)
            if (!p.contains({x, a.y})) ok = false;
        if (ok) return true;
    }
    if (a.x == b.x) {
        bool ok = true;
        for (int y = std::min(a.y, b.y); y <= std::max(a.y, b.y); ++y)
            if (!p.contains({a.x, y})) ok = false;
        if (ok) return true;
    }
    return false;
}

// Every subset, checked pairwise. Usable up to ~20 cells.
inline IntPolynomial naive_rook_polynomial(const CellSet& p,
                                           const std::vector<Cell>& forbidden = {}) {
    const std::vector<Cell>& cells = p.cells();
    std::set<Cell> banned(forbidden.begin(), forbidden.end());
    std::vector<std::int64_t> counts(cells.size() + 1, 0);
    int max_k = 0;
    for (unsigned long mask = 0; mask < (1ul << cells.size()); ++mask) {
        std::vector<Cell> chosen;
        for (size_t i = 0; i < cells.size(); ++i)
            if (mask & (1ul << i)) chosen.push_back(cells[i]);
        bool ok = true;
        for (const Cell& c : chosen)
            if (banned.count(c)) ok = false;
        for (size_t i = 0; i < chosen.size() && ok; ++i)
            for (size_t j = i + 1; j < chosen.size() && ok; ++j)
                if (naive_attacks(p, chosen[i], chosen[j])) ok = false;
        if (ok) {
            ++counts[chosen.size()];
            max_k = std::max(max_k, static_cast<int>(chosen.size()));
        }
    }
    counts.resize(max_k + 1);
    return IntPolynomial(counts);
}

// Number of simple neighbour-paths from c to d.
inline int count_simple_paths(const CellSet& p, Cell c, Cell d) {
    int found = 0;
    std::set<Cell> used{c};
    std::function<void(Cell)> walk = [&](Cell cur) {
        if (cur == d) {
            ++found;
            return;
        }
        for (Cell n : thinpoly::neighbours(p, cur))
            if (used.insert(n).second) {
                walk(n);
                used.erase(n);
            }
    };
    walk(c);
    return found;
}

// V - E + F of the union of closed cells; 1 iff simply connected.
inline int euler_characteristic(const CellSet& p) {
    return static_cast<int>(thinpoly::vertices(p).size()) - thinpoly::edge_count(p) + p.size();
}

inline CellSet shape(const std::string& rows_with_slashes) {
    std::string text = rows_with_slashes;
    for (char& ch : text)
        if (ch == '/') ch = '\n';
    return thinpoly::parse_ascii(text);
}

}  // namespace testing_oracles
