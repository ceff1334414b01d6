// Rook configurations and rook polynomials.
//
// Two cells attack each other when they lie in a common inner interval: same
// row or same column with every intermediate cell present. A gap in the row
// blocks visibility, unlike the classical board convention.
#pragma once

#include <vector>

#include "thinpoly/cell.hpp"
#include "thinpoly/polynomial.hpp"

namespace thinpoly {

// A pairwise non-attacking set of cells within an ambient set.
struct RookConfig {
    std::vector<Cell> cells;  // canonical order
    friend bool operator==(const RookConfig&, const RookConfig&) = default;
};

bool attacks(const CellSet& p, Cell c1, Cell c2);

// Coefficient of t^k counts the k-subsets of p that are pairwise
// non-attacking. Disconnected sets are allowed.
IntPolynomial rook_polynomial(const CellSet& p);

// Largest k admitting a k-rook configuration; 0 for the empty set.
int rook_number(const CellSet& p);

// Counts configurations avoiding the forbidden cells while keeping the attack
// relation of the full ambient set: two allowed cells may still attack
// through a forbidden one.
IntPolynomial restricted_rook_polynomial(const CellSet& p, const std::vector<Cell>& forbidden);

// Counts configurations that contain c.
IntPolynomial rook_polynomial_through(const CellSet& p, Cell c);

// All configurations of maximum size, in canonical order.
std::vector<RookConfig> max_rook_configs(const CellSet& p);

}  // namespace thinpoly
