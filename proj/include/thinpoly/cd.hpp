// h-polynomials for collections of simple thin polyominoes, the alternating
// sign value (-1)^floor(deg h / 2) * h(-1), and the executable decomposition
// recursion that re-derives it.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "thinpoly/cell.hpp"
#include "thinpoly/collapse.hpp"
#include "thinpoly/polynomial.hpp"

namespace thinpoly {

struct CdVerdict {
    IntPolynomial h;
    int degree = 0;
    std::int64_t value = 0;   // (-1)^floor(degree/2) * h(-1)
    bool sign_ok = false;     // value >= 0
    bool parity_zero = false; // degree odd implies value == 0
};

// The h-polynomial of a collection whose components are all simple thin
// polyominoes equals its rook polynomial; other inputs raise
// unsupported_input.
IntPolynomial h_polynomial(const CellSet& p);

// (-1)^floor(deg h / 2) * h(-1), exact. Zero polynomial raises domain_error.
std::int64_t cd_value(const IntPolynomial& h);

// Verdict for a collection whose components are simple thin with the
// S-property. A negative value or an odd-degree nonzero h(-1) would refute
// the underlying theorem and raises theorem_violation instead of returning.
CdVerdict is_cd(const CellSet& p);

// Recursion trace: nodes with even rook number carry their refined collapse
// datum, identity report and the branch polyominoes as children; nodes with
// odd rook number are leaves of value zero. Every node's value is checked
// against the direct evaluation.
struct TraceNode {
    CellSet poly;  // normalized
    IntPolynomial rook;
    int rook_number = 0;
    std::int64_t value = 0;
    std::optional<CollapseDatum> datum;
    DecompositionReport report;
    std::vector<TraceNode> children;
};

using DecompositionTree = TraceNode;

// Requires a connected simple thin polyomino with the S-property.
DecompositionTree theorem_trace(const CellSet& p);

}  // namespace thinpoly
