// Collapse data on simple thin polyominoes with the S-property, the refined
// collapse datum, the Q/R/Q_i decomposition with gluing, and machine checks
// of every identity the decomposition is supposed to satisfy.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thinpoly/cell.hpp"
#include "thinpoly/intervals.hpp"
#include "thinpoly/polynomial.hpp"

namespace thinpoly {

// A triple (I, J, PI): I and J maximal inner intervals with J the only
// maximal inner interval meeting I in a cell, PI either empty or the single
// cell of J, and the rest of the polyomino after removing I and PI non-empty
// and connected. Under the S-property I always has exactly two cells.
//
// Derived roles: single_i is the single cell of I, meet is the cell I cap J,
// single_j the single cell of J.
struct CollapseDatum {
    InnerInterval i;
    InnerInterval j;
    std::optional<Cell> pi;
    Cell single_i{};  // the free cell removed first
    Cell meet{};      // I cap J
    Cell single_j{};  // the single cell of J

    friend bool operator==(const CollapseDatum&, const CollapseDatum&) = default;
};

// Layouts of the neighbourhood of J, keyed by where the single cell of J sits
// relative to the second end-cell.
enum class NeighbourhoodTag {
    pi_nonempty,                // PI = {E}; E is an end-cell of J
    pi_empty_e_neighbour_of_ck, // PI empty; the second end-cell is next to E
    pi_empty_e_endcell,         // PI empty; E itself is the second end-cell
    pi_empty_e_not_neighbour,   // PI empty; E interior, away from the second end
};

std::string to_string(NeighbourhoodTag tag);

// The cells C_1..C_k of J other than the meet cell and the single cell,
// ordered from the first end-cell towards the second, with the unique cell
// hanging off each of them. b_extra is the second cell hanging off the last
// C when it has three neighbours; in that situation it is always the hanger
// that is both single and an end-cell of its own interval.
struct NeighbourhoodCase {
    NeighbourhoodTag tag = NeighbourhoodTag::pi_empty_e_endcell;
    std::vector<Cell> c_cells;
    std::vector<Cell> b_cells;     // aligned with c_cells
    std::optional<Cell> b_extra;   // present only in the three-neighbour case
};

// Q = P minus the single cell of I; R = P minus I (PI empty) or P minus the
// two single cells (PI = {E}); qi are the branch polyominoes, with the last
// one glued when the three-neighbour case applies. All sets stay in P's
// coordinate frame.
struct Decomposition {
    CellSet q;
    CellSet r;
    std::vector<CellSet> qi;
    struct Glue {
        Cell moved;        // the pendant cell that gets translated
        Cell slot;         // the grid slot it lands in (the last C's position)
        int dx = 0, dy = 0;
    };
    std::optional<Glue> glue;
};

// One verified identity: both sides computed by independent routes.
struct IdentityCheck {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

struct DecompositionReport {
    std::vector<IdentityCheck> checks;
    bool all_pass = true;
};

// All collapse data of p, canonically ordered. Requires a simple thin
// polyomino with the S-property and more than one cell. An empty result on a
// valid input would contradict the existence theorem and raises
// theorem_violation.
std::vector<CollapseDatum> collapse_data(const CellSet& p);

// The unrestricted form of the definition, for experiments outside the
// S-property class: PI ranges over every sub-interval of J (including the
// empty one) rather than just the single cell of J, and no single-cell roles
// are derived. Requires a simple thin polyomino with more than one cell.
// Unused by the verification pipeline.
struct GeneralCollapseDatum {
    InnerInterval i;
    InnerInterval j;
    std::vector<Cell> pi;  // contiguous inside J, possibly empty
};
std::vector<GeneralCollapseDatum> general_collapse_data(const CellSet& p);

// True when the datum supports the decomposition: with PI = {E} the single
// cell of J must be an end-cell of J. The general definition also admits
// data where E sits inside J next to the meet cell; those are enumerated by
// collapse_data but removing {single_i, E} disconnects the rest, so no
// reduced polyomino R exists for them.
bool is_conforming(const CellSet& p, const CollapseDatum& d);

// (first, second) end-cells of J: the first is E when PI = {E} and the meet
// cell otherwise; the second is the other end. Raises domain_error on a
// non-conforming datum.
std::pair<Cell, Cell> first_second_end_cells(const CellSet& p, const CollapseDatum& d);

// Whether the datum satisfies the refinement: its second end-cell has at most
// two neighbour cells, or has exactly three of which one is both a single
// cell and an end-cell of the maximal inner interval containing it.
bool satisfies_refinement(const CellSet& p, const CollapseDatum& d);

// The canonically least conforming datum satisfying the refinement, found by
// exhaustive filter over collapse_data. None existing raises
// theorem_violation.
CollapseDatum refined_collapse_datum(const CellSet& p);

// The same guarantee established constructively: start from the canonically
// least conforming datum; if it fails the refinement, restrict to the branch
// of the polyomino hanging past the second end-cell, recurse, and lift the
// result. depth_out, when given, receives the recursion depth.
CollapseDatum collapse_search_inductive(const CellSet& p, int* depth_out = nullptr);

// Identifies C_1..C_k, their hangers, the optional extra hanger, and the
// layout tag; verifies that hangers alternate sides. A structure outside the
// four layouts raises theorem_violation; a non-conforming datum raises
// domain_error.
NeighbourhoodCase classify_neighbourhood(const CellSet& p, const CollapseDatum& d);

// Builds Q, R and the branches for a conforming datum satisfying the
// refinement. In the three-neighbour case the pendant extra hanger is
// translated into the last C's slot, which restores the attack it had
// through that cell.
Decomposition build_decomposition(const CellSet& p, const CollapseDatum& d);

// Evaluates every decomposition identity with independent computations on
// the two sides and reports pass/fail per identity.
DecompositionReport verify_decomposition(const CellSet& p, const CollapseDatum& d);

}  // namespace thinpoly
