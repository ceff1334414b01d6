#include "thinpoly/collapse.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "thinpoly/grid.hpp"
#include "thinpoly/rook.hpp"

namespace thinpoly {

namespace {

void require_collapse_input(const CellSet& p) {
    if (!is_polyomino(p) || !is_simple(p) || !is_thin(p) || !has_s_property(p))
        throw domain_error("collapse data require a simple thin polyomino with the S-property");
    if (p.size() < 2) throw domain_error("collapse data require more than one cell");
}

Cell unique_single_of(const CellSet& p, const InnerInterval& iv) {
    std::vector<Cell> singles = single_cells(p);
    std::optional<Cell> found;
    for (const Cell& c : iv.cells) {
        if (!std::binary_search(singles.begin(), singles.end(), c)) continue;
        if (found) throw theorem_violation("interval with two single cells in an S-property input");
        found = c;
    }
    if (!found) throw theorem_violation("interval without a single cell in an S-property input");
    return *found;
}

bool datum_less(const CollapseDatum& a, const CollapseDatum& b) {
    if (a.i.cells != b.i.cells) return a.i.cells < b.i.cells;
    if (a.j.cells != b.j.cells) return a.j.cells < b.j.cells;
    if (a.pi.has_value() != b.pi.has_value()) return !a.pi.has_value();
    return false;
}

bool cells_adjacent(Cell a, Cell b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1;
}

// Which side of J a hanger sits on: -1 / +1 across the run direction.
int side_of(const InnerInterval& j, Cell b) {
    if (j.orientation == Orientation::horizontal) return b.y > j.cells.front().y ? 1 : -1;
    return b.x > j.cells.front().x ? 1 : -1;
}

bool is_single_end_cell(const CellSet& p, Cell c) {
    std::vector<InnerInterval> ivs = intervals_containing(p, c);
    if (ivs.size() != 1) return false;
    std::vector<Cell> ends = end_cells(ivs[0]);
    return std::find(ends.begin(), ends.end(), c) != ends.end();
}

}  // namespace

std::string to_string(NeighbourhoodTag tag) {
    switch (tag) {
        case NeighbourhoodTag::pi_nonempty: return "PI_NONEMPTY";
        case NeighbourhoodTag::pi_empty_e_neighbour_of_ck: return "PI_EMPTY_E_NEIGHBOUR_OF_CK";
        case NeighbourhoodTag::pi_empty_e_endcell: return "PI_EMPTY_E_ENDCELL";
        default: return "PI_EMPTY_E_NOT_NEIGHBOUR";
    }
}

std::vector<CollapseDatum> collapse_data(const CellSet& p) {
    require_collapse_input(p);
    std::vector<InnerInterval> intervals = maximal_inner_intervals(p);
    std::vector<CollapseDatum> out;

    for (const InnerInterval& i : intervals) {
        // J must be the only maximal inner interval meeting I in a cell.
        std::vector<std::pair<InnerInterval, Cell>> meets;
        for (const InnerInterval& j : intervals) {
            if (j == i) continue;
            std::vector<Cell> common;
            for (const Cell& c : j.cells)
                if (i.contains(c)) common.push_back(c);
            if (common.size() == 1) meets.push_back({j, common[0]});
            else if (common.size() > 1)
                throw theorem_violation("two maximal inner intervals share two cells");
        }
        if (meets.size() != 1) continue;
        const InnerInterval& j = meets[0].first;
        Cell d = meets[0].second;
        Cell c = unique_single_of(p, i);
        Cell e = unique_single_of(p, j);
        if (i.size() != 2)
            throw theorem_violation("collapse interval with more than two cells under the S-property");
        if (c == d) continue;  // the meet cell cannot be the single cell of I

        for (int with_pi = 0; with_pi <= 1; ++with_pi) {
            std::optional<Cell> pi;
            if (with_pi) {
                if (e == d) continue;
                pi = e;
            }
            std::vector<Cell> removed = i.cells;
            if (pi) removed.push_back(*pi);
            CellSet rest = p.without(removed);
            if (rest.empty() || !is_polyomino(rest)) continue;
            out.push_back({i, j, pi, c, d, e});
        }
    }
    std::sort(out.begin(), out.end(), datum_less);
    if (out.empty())
        throw theorem_violation("no collapse datum found for a valid input: " + to_ascii(p));
    return out;
}

std::vector<GeneralCollapseDatum> general_collapse_data(const CellSet& p) {
    if (!is_polyomino(p) || !is_simple(p) || !is_thin(p))
        throw domain_error("general collapse data require a simple thin polyomino");
    if (p.size() < 2) throw domain_error("general collapse data require more than one cell");
    std::vector<InnerInterval> intervals = maximal_inner_intervals(p);
    std::vector<GeneralCollapseDatum> out;

    for (const InnerInterval& i : intervals) {
        std::vector<std::pair<InnerInterval, Cell>> meets;
        for (const InnerInterval& j : intervals) {
            if (j == i) continue;
            std::vector<Cell> common;
            for (const Cell& c : j.cells)
                if (i.contains(c)) common.push_back(c);
            if (common.size() == 1) meets.push_back({j, common[0]});
        }
        if (meets.size() != 1) continue;
        const InnerInterval& j = meets[0].first;
        Cell d = meets[0].second;

        // PI runs over all contiguous sub-runs of J avoiding the meet cell,
        // the empty run included.
        std::vector<std::vector<Cell>> candidates{{}};
        int len = j.size();
        for (int a = 0; a < len; ++a)
            for (int b = a; b < len; ++b)
                candidates.emplace_back(j.cells.begin() + a, j.cells.begin() + b + 1);
        for (const std::vector<Cell>& pi : candidates) {
            if (std::find(pi.begin(), pi.end(), d) != pi.end()) continue;
            std::vector<Cell> removed = i.cells;
            for (const Cell& c : pi) removed.push_back(c);
            CellSet rest = p.without(removed);
            if (rest.empty() || !is_polyomino(rest)) continue;
            out.push_back({i, j, pi});
        }
    }
    return out;
}

bool is_conforming(const CellSet& p, const CollapseDatum& d) {
    (void)p;
    if (!d.pi) return true;
    std::vector<Cell> ends = end_cells(d.j);
    return std::find(ends.begin(), ends.end(), d.single_j) != ends.end();
}

std::pair<Cell, Cell> first_second_end_cells(const CellSet& p, const CollapseDatum& d) {
    std::vector<Cell> ends = end_cells(d.j);
    if (ends.size() != 2)
        throw theorem_violation("collapse interval J with a single cell only");
    Cell first;
    if (d.pi) {
        if (!is_conforming(p, d))
            throw domain_error("datum with PI = {E} where E is not an end-cell of J");
        first = d.single_j;
    } else {
        first = d.meet;
        if (std::find(ends.begin(), ends.end(), first) == ends.end())
            throw theorem_violation("meet cell of a PI-empty datum is not an end-cell of J");
    }
    Cell second = ends[0] == first ? ends[1] : ends[0];
    return {first, second};
}

bool satisfies_refinement(const CellSet& p, const CollapseDatum& d) {
    if (!is_conforming(p, d)) return false;
    auto [first, second] = first_second_end_cells(p, d);
    std::vector<Cell> nbs = neighbours(p, second);
    if (nbs.size() <= 2) return true;
    if (nbs.size() > 3)
        throw theorem_violation("end-cell of a maximal interval with four neighbours");
    for (const Cell& n : nbs)
        if (is_single_end_cell(p, n)) return true;
    return false;
}

CollapseDatum refined_collapse_datum(const CellSet& p) {
    for (const CollapseDatum& d : collapse_data(p))
        if (satisfies_refinement(p, d)) return d;
    throw theorem_violation("no collapse datum satisfies the refinement: " + to_ascii(p));
}

NeighbourhoodCase classify_neighbourhood(const CellSet& p, const CollapseDatum& d) {
    if (!is_conforming(p, d))
        throw domain_error("cannot classify a datum with PI = {E} and E interior to J");
    auto [first, second] = first_second_end_cells(p, d);

    std::vector<Cell> line = d.j.cells;
    if (line.front() != first) std::reverse(line.begin(), line.end());
    if (line.front() != first || line.back() != second)
        throw theorem_violation("end-cells inconsistent with the run order of J");

    NeighbourhoodCase out;
    if (d.pi)
        out.tag = NeighbourhoodTag::pi_nonempty;
    else if (d.single_j == second)
        out.tag = NeighbourhoodTag::pi_empty_e_endcell;
    else if (cells_adjacent(d.single_j, second))
        out.tag = NeighbourhoodTag::pi_empty_e_neighbour_of_ck;
    else
        out.tag = NeighbourhoodTag::pi_empty_e_not_neighbour;

    std::set<Cell> jcells(d.j.cells.begin(), d.j.cells.end());
    for (const Cell& c : line) {
        if (c == d.meet || c == d.single_j) continue;
        out.c_cells.push_back(c);
        std::vector<Cell> hangers;
        for (const Cell& n : neighbours(p, c))
            if (!jcells.count(n)) hangers.push_back(n);
        bool may_have_two =
            c == second && out.tag == NeighbourhoodTag::pi_empty_e_neighbour_of_ck;
        if (hangers.empty())
            throw theorem_violation("non-single cell of J without a cell hanging off it");
        if (hangers.size() > 2 || (hangers.size() == 2 && !may_have_two))
            throw theorem_violation("cell of J with more hangers than any layout allows");
        if (hangers.size() == 1) {
            out.b_cells.push_back(hangers[0]);
        } else {
            // The extra hanger is the one that is both single and an end-cell
            // of its own interval; if neither qualifies (a datum outside the
            // refinement), fall back to the side opposite the single cell of I.
            bool q0 = is_single_end_cell(p, hangers[0]);
            bool q1 = is_single_end_cell(p, hangers[1]);
            int extra;
            if (q0 != q1) extra = q0 ? 0 : 1;
            else if (q0 && q1) extra = hangers[0] < hangers[1] ? 0 : 1;
            else extra = side_of(d.j, hangers[0]) != side_of(d.j, d.single_i) ? 0 : 1;
            out.b_extra = hangers[extra];
            out.b_cells.push_back(hangers[1 - extra]);
        }
    }

    // Hangers on adjacent cells of J must alternate sides, or the polyomino
    // would contain a 2x2 block.
    for (size_t i = 0; i + 1 < out.c_cells.size(); ++i) {
        if (!cells_adjacent(out.c_cells[i], out.c_cells[i + 1])) continue;
        if (side_of(d.j, out.b_cells[i]) == side_of(d.j, out.b_cells[i + 1]))
            throw theorem_violation("hangers of adjacent cells on the same side of J");
    }
    return out;
}

Decomposition build_decomposition(const CellSet& p, const CollapseDatum& d) {
    if (!satisfies_refinement(p, d))
        throw domain_error("decomposition requires a datum satisfying the refinement");
    NeighbourhoodCase nc = classify_neighbourhood(p, d);

    Decomposition out;
    out.q = p.without(d.single_i);
    if (d.pi)
        out.r = p.without(std::vector<Cell>{d.single_i, d.single_j});
    else
        out.r = p.without(d.i.cells);
    if (!is_polyomino(out.r))
        throw theorem_violation("reduced polyomino R is not connected");

    for (size_t i = 0; i < nc.c_cells.size(); ++i) {
        // The branch hanging off J at this cell: everything whose path to the
        // hanger avoids the cell itself.
        CellSet cut = out.q.without(nc.c_cells[i]);
        std::optional<CellSet> branch;
        for (const CellSet& comp : components(cut))
            if (comp.contains(nc.b_cells[i])) branch = comp;
        if (!branch) throw theorem_violation("hanger vanished from its own branch");
        out.qi.push_back(*branch);
    }

    if (nc.b_extra) {
        Cell slot = nc.c_cells.back();
        Cell moved = *nc.b_extra;
        CellSet& last = out.qi.back();
        if (last.contains(slot)) throw theorem_violation("glue slot already occupied");
        int adjacent = 0;
        for (const Cell& c : last)
            if (cells_adjacent(c, slot)) ++adjacent;
        if (adjacent != 1 || !cells_adjacent(nc.b_cells.back(), slot))
            throw theorem_violation("glued cell is not attached exactly at the last hanger");
        last = last.with(slot);
        out.glue = Decomposition::Glue{moved, slot, slot.x - moved.x, slot.y - moved.y};
    }
    return out;
}

DecompositionReport verify_decomposition(const CellSet& p, const CollapseDatum& d) {
    if (!is_conforming(p, d))
        throw domain_error("cannot verify a non-conforming datum");

    DecompositionReport rep;
    auto add = [&rep](const std::string& name, const IntPolynomial& lhs, const IntPolynomial& rhs) {
        bool ok = lhs == rhs;
        rep.checks.push_back({name, lhs.to_string(), rhs.to_string(), ok});
        rep.all_pass = rep.all_pass && ok;
    };
    auto add_flag = [&rep](const std::string& name, bool ok, const std::string& note) {
        rep.checks.push_back({name, note, "", ok});
        rep.all_pass = rep.all_pass && ok;
    };

    const IntPolynomial one_plus_t({1, 1});
    IntPolynomial rp = rook_polynomial(p);
    IntPolynomial r_hat_c = restricted_rook_polynomial(p, {d.single_i});
    IntPolynomial r_hat_i = restricted_rook_polynomial(p, d.i.cells);
    IntPolynomial r_through = rook_polynomial_through(p, d.single_i);

    CellSet q = p.without(d.single_i);
    CellSet r = d.pi ? p.without(std::vector<Cell>{d.single_i, d.single_j})
                     : p.without(d.i.cells);
    IntPolynomial rook_q = rook_polynomial(q);
    IntPolynomial rook_r = rook_polynomial(r);

    add("rP = rP_no_C + t*rP_no_I", rp, r_hat_c + r_hat_i.shifted(1));
    add("rP_at_C = t*rP_no_I", r_through, r_hat_i.shifted(1));
    add("rP_no_C = r(Q)", r_hat_c, rook_q);
    add("rP_no_I = r(R)", r_hat_i, rook_r);
    add("rP = r(Q) + t*r(R)", rp, rook_q + rook_r.shifted(1));

    if (!satisfies_refinement(p, d)) return rep;

    Decomposition dec = build_decomposition(p, d);
    IntPolynomial rq_hat_d = restricted_rook_polynomial(q, {d.meet});
    IntPolynomial rq_hat_j = restricted_rook_polynomial(q, d.j.cells);

    add_flag("D is single in Q", intervals_containing(q, d.meet).size() == 1, to_string(d.meet));
    add("r(Q) = rQ_no_D + t*rQ_no_J", rook_q, rq_hat_d + rq_hat_j.shifted(1));
    add("rQ_no_D = r(R)", rq_hat_d, rook_r);

    IntPolynomial product = IntPolynomial::constant(1);
    int branch_rook_sum = 0;
    bool branch_classes = true;
    for (const CellSet& qi : dec.qi) {
        product = product * rook_polynomial(qi);
        branch_rook_sum += rook_number(qi);
        branch_classes = branch_classes && is_polyomino(qi) && is_simple(qi) && is_thin(qi) &&
                         has_s_property(qi);
    }
    add("rQ_no_J = prod r(Qi)", rq_hat_j, product);
    add_flag("sum r(Qi) = r(P) - 2", branch_rook_sum == rook_number(p) - 2,
             std::to_string(branch_rook_sum) + " vs " + std::to_string(rook_number(p) - 2));
    add("rP = (1+t)r(R) + t*prod r(Qi)", rp, one_plus_t * rook_r + product.shifted(1));
    add_flag("every Qi is simple thin with the S-property", branch_classes,
             std::to_string(dec.qi.size()) + " branches");

    // The unglued branches are exactly the connected components of Q minus J.
    std::vector<CellSet> comps = components(q.without(d.j.cells));
    std::vector<CellSet> expected;
    NeighbourhoodCase nc = classify_neighbourhood(p, d);
    for (size_t i = 0; i < dec.qi.size(); ++i) {
        if (dec.glue && i + 1 == dec.qi.size())
            expected.push_back(dec.qi[i].without(dec.glue->slot));
        else
            expected.push_back(dec.qi[i]);
    }
    if (nc.b_extra) expected.push_back(CellSet({*nc.b_extra}));
    std::sort(expected.begin(), expected.end());
    add_flag("branches partition Q minus J", comps == expected,
             std::to_string(comps.size()) + " components");

    return rep;
}

CollapseDatum collapse_search_inductive(const CellSet& p, int* depth_out) {
    std::vector<CollapseDatum> data = collapse_data(p);
    std::optional<CollapseDatum> start;
    for (const CollapseDatum& d : data)
        if (is_conforming(p, d)) {
            start = d;
            break;
        }
    if (!start) throw theorem_violation("no conforming collapse datum: " + to_ascii(p));

    if (satisfies_refinement(p, *start)) {
        if (depth_out) *depth_out = 0;
        return *start;
    }

    // Only the three-neighbour layout without a qualifying hanger remains:
    // restrict to the branch past the second end-cell plus the single cell of
    // J, which stays simple thin with the S-property, and recurse.
    NeighbourhoodCase nc = classify_neighbourhood(p, *start);
    if (nc.tag != NeighbourhoodTag::pi_empty_e_neighbour_of_ck || !nc.b_extra)
        throw theorem_violation("refinement failed outside the three-neighbour layout");
    Cell ck = nc.c_cells.back();
    Cell e = start->single_j;

    std::vector<Cell> keep{ck, e};
    for (const CellSet& comp : components(p.without(ck)))
        if (!comp.contains(e))
            for (const Cell& c : comp) keep.push_back(c);
    CellSet reduced{keep};
    if (reduced.size() >= p.size())
        throw theorem_violation("branch restriction did not shrink the polyomino");
    if (!is_polyomino(reduced) || !is_simple(reduced) || !is_thin(reduced) ||
        !has_s_property(reduced))
        throw theorem_violation("branch restriction left the S-property class");

    int child_depth = 0;
    CollapseDatum inner = collapse_search_inductive(reduced, &child_depth);

    // Lift: the found intervals are maximal inner intervals of the original
    // polyomino as well; rebuild the datum there and re-check everything.
    std::optional<InnerInterval> lift_i, lift_j;
    for (const InnerInterval& iv : maximal_inner_intervals(p)) {
        if (iv.cells == inner.i.cells) lift_i = iv;
        if (iv.cells == inner.j.cells) lift_j = iv;
    }
    if (!lift_i || !lift_j)
        throw theorem_violation("lifted intervals are not maximal in the original polyomino");
    CollapseDatum lifted{*lift_i, *lift_j, inner.pi, unique_single_of(p, *lift_i), inner.meet,
                         unique_single_of(p, *lift_j)};
    std::vector<CollapseDatum> all = collapse_data(p);
    if (std::find(all.begin(), all.end(), lifted) == all.end())
        throw theorem_violation("lifted datum is not a collapse datum of the original polyomino");
    if (!satisfies_refinement(p, lifted))
        throw theorem_violation("lifted datum does not satisfy the refinement");
    if (depth_out) *depth_out = child_depth + 1;
    return lifted;
}

}  // namespace thinpoly
