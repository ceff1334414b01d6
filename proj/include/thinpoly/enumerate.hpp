// Exhaustive generation of fixed (translation-normalized) polyominoes.
#pragma once

#include <functional>
#include <vector>

#include "thinpoly/cell.hpp"

namespace thinpoly {

// Emits every fixed n-cell polyomino exactly once, normalized, in a
// deterministic order, via growth enumeration with a visited-frontier
// discipline that never produces duplicates.
void fixed_polyominoes(int n, const std::function<void(const CellSet&)>& emit);

std::vector<CellSet> fixed_polyominoes(int n);

// Independent cross-check enumerator: filters all n-cell subsets of the n x n
// box for connectivity and normalization. Exponential in n; intended for
// n <= 6.
std::vector<CellSet> fixed_polyominoes_naive(int n);

struct ClassFilters {
    bool simple = false;
    bool thin = false;
    bool s_property = false;  // evaluated only on simple thin survivors
};

bool passes_filters(const CellSet& p, const ClassFilters& f);

std::vector<CellSet> filter_class(const std::vector<CellSet>& in, const ClassFilters& f);

// Keeps one representative per orbit of the 8 square symmetries: a polyomino
// survives iff it equals the least of its transforms.
std::vector<CellSet> dedup_up_to_symmetry(const std::vector<CellSet>& in);

}  // namespace thinpoly
