#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "thinpoly/collapse.hpp"
#include "thinpoly/enumerate.hpp"
#include "thinpoly/grid.hpp"
#include "thinpoly/intervals.hpp"
#include "thinpoly/rook.hpp"

using namespace thinpoly;
using testing_oracles::shape;

namespace {

const CellSet kL = shape("##/#.");
const CellSet kU = shape("#.#/###");
// Both hangers of the second end-cell present, one of them a pendant leaf.
const CellSet kThreeNb = shape("#.#./###./..##");
// Two comb units joined by a bridge: every collapse datum has a
// three-neighbour second end-cell, so the two-neighbour clause alone fails.
const CellSet kBridge = shape("..###../###.###/#.#.#.#");
// The least conforming datum fails both clauses, forcing one recursion step.
const CellSet kDeep = shape("..##/#.#./###./..##");
const Cell A{0, 0}, B{0, 1}, C{1, 1};

bool has_datum(const std::vector<CollapseDatum>& data, const std::vector<Cell>& i,
               const std::vector<Cell>& j, bool with_pi) {
    for (const CollapseDatum& d : data)
        if (d.i.cells == i && d.j.cells == j && d.pi.has_value() == with_pi) return true;
    return false;
}

}  // namespace

TEST_CASE("collapse data of the L-tromino") {
    std::vector<CollapseDatum> data = collapse_data(kL);
    REQUIRE(data.size() == 2);
    CHECK(has_datum(data, {A, B}, {B, C}, false));
    CHECK(has_datum(data, {B, C}, {A, B}, false));
    for (const CollapseDatum& d : data) CHECK(is_conforming(kL, d));
}

TEST_CASE("collapse data of the U-pentomino") {
    std::vector<CollapseDatum> data = collapse_data(kU);
    CHECK(has_datum(data, {{0, 0}, {0, 1}}, {{0, 0}, {1, 0}, {2, 0}}, false));
    // The PI = {E} variants place E inside J; they satisfy the definition but
    // no reduced polyomino exists for them.
    int nonconforming = 0;
    for (const CollapseDatum& d : data)
        if (!is_conforming(kU, d)) {
            ++nonconforming;
            CHECK(d.pi.has_value());
            CHECK_FALSE(is_polyomino(kU.without(std::vector<Cell>{d.single_i, d.single_j})));
            CHECK_THROWS_AS(classify_neighbourhood(kU, d), domain_error);
            CHECK_THROWS_AS(verify_decomposition(kU, d), domain_error);
            CHECK_FALSE(satisfies_refinement(kU, d));
        }
    CHECK(nonconforming == 2);
}

TEST_CASE("collapse preconditions") {
    CHECK_THROWS_AS(collapse_data(shape("##")), domain_error);       // fails the S-property
    CHECK_THROWS_AS(collapse_data(CellSet({{0, 0}})), domain_error); // one cell
    CHECK_THROWS_AS(refined_collapse_datum(CellSet({{0, 0}})), domain_error);
    CHECK_THROWS_AS(collapse_data(shape("###")), domain_error);
}

TEST_CASE("refined datum of the L-tromino under canonical order") {
    CollapseDatum d = refined_collapse_datum(kL);
    CHECK(d.i.cells == std::vector<Cell>{A, B});
    CHECK(d.j.cells == std::vector<Cell>{B, C});
    CHECK_FALSE(d.pi.has_value());
    CHECK(d.single_i == A);
    CHECK(d.meet == B);
    CHECK(d.single_j == C);
    auto [first, second] = first_second_end_cells(kL, d);
    CHECK(first == B);
    CHECK(second == C);
    CHECK(neighbours(kL, second).size() == 1);
}

TEST_CASE("refined datum of the U-pentomino") {
    CollapseDatum d = refined_collapse_datum(kU);
    CHECK(d.i.cells == std::vector<Cell>{{0, 0}, {0, 1}});
    auto [first, second] = first_second_end_cells(kU, d);
    CHECK(neighbours(kU, second).size() <= 2);
}

TEST_CASE("first and second end-cells with PI = {E} on a two-cell J") {
    // Constructed datum: with PI = {E} the first end-cell is E, the meet cell
    // is the other end.
    CollapseDatum d{{Orientation::vertical, {A, B}}, {Orientation::horizontal, {B, C}},
                    C, A, B, C};
    auto [first, second] = first_second_end_cells(kL, d);
    CHECK(first == C);
    CHECK(second == B);
}

TEST_CASE("classification of the L-tromino datum") {
    NeighbourhoodCase nc = classify_neighbourhood(kL, refined_collapse_datum(kL));
    CHECK(nc.tag == NeighbourhoodTag::pi_empty_e_endcell);
    CHECK(nc.c_cells.empty());
    CHECK(nc.b_cells.empty());
    CHECK_FALSE(nc.b_extra.has_value());
}

TEST_CASE("classification of the U-pentomino datum") {
    NeighbourhoodCase nc = classify_neighbourhood(kU, refined_collapse_datum(kU));
    CHECK(nc.tag == NeighbourhoodTag::pi_empty_e_neighbour_of_ck);
    CHECK(nc.c_cells == std::vector<Cell>{{2, 0}});
    CHECK(nc.b_cells == std::vector<Cell>{{2, 1}});
    CHECK_FALSE(nc.b_extra.has_value());
}

TEST_CASE("a refined datum with PI nonempty") {
    // One leg pendant next to the meet cell: removing I alone would isolate
    // the single cell of J, so the datum carries PI = {E}.
    CellSet w = shape(".#./###/..#");
    CollapseDatum d = refined_collapse_datum(w);
    CHECK(d.pi.has_value());
    CHECK(*d.pi == d.single_j);
    NeighbourhoodCase nc = classify_neighbourhood(w, d);
    CHECK(nc.tag == NeighbourhoodTag::pi_nonempty);
    CHECK(nc.c_cells.size() == 1);
    DecompositionReport rep = verify_decomposition(w, d);
    CHECK(rep.all_pass);
    Decomposition dec = build_decomposition(w, d);
    CHECK(dec.r == w.without(std::vector<Cell>{d.single_i, d.single_j}));
    CHECK(dec.qi.size() == 1);
    CHECK(dec.qi[0].size() == 1);
}

TEST_CASE("PI nonempty with the single cells of I and J at opposite ends") {
    CellSet z = shape("#../###/.#.");
    std::vector<CollapseDatum> data = collapse_data(z);
    bool found = false;
    for (const CollapseDatum& d : data) {
        if (!d.pi || !is_conforming(z, d)) continue;
        NeighbourhoodCase nc = classify_neighbourhood(z, d);
        CHECK(nc.tag == NeighbourhoodTag::pi_nonempty);
        if (satisfies_refinement(z, d)) {
            CHECK(verify_decomposition(z, d).all_pass);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("decomposition of the L-tromino") {
    // The datum collapsing the horizontal interval: Q keeps the vertical
    // domino and R is the single bottom cell.
    std::vector<CollapseDatum> data = collapse_data(kL);
    const CollapseDatum* d = nullptr;
    for (const CollapseDatum& cand : data)
        if (cand.i.cells == std::vector<Cell>{B, C}) d = &cand;
    REQUIRE(d != nullptr);
    Decomposition dec = build_decomposition(kL, *d);
    CHECK(dec.q == CellSet({A, B}));
    CHECK(dec.r == CellSet({A}));
    CHECK(dec.qi.empty());
    CHECK_FALSE(dec.glue.has_value());

    DecompositionReport rep = verify_decomposition(kL, *d);
    CHECK(rep.all_pass);
    // (1+t)(1+t) + t*1 = 1 + 3t + t^2
    CHECK(IntPolynomial({1, 1}) * IntPolynomial({1, 1}) + IntPolynomial({0, 1}) ==
          rook_polynomial(kL));
}

TEST_CASE("decomposition of the U-pentomino") {
    CollapseDatum d = refined_collapse_datum(kU);
    Decomposition dec = build_decomposition(kU, d);
    CHECK(dec.q == kU.without(d.single_i));
    CHECK(dec.r == kU.without(d.i.cells));
    REQUIRE(dec.qi.size() == 1);
    CHECK(dec.qi[0].size() == 1);
    int sum = 0;
    for (const CellSet& qi : dec.qi) sum += rook_number(qi);
    CHECK(sum == rook_number(kU) - 2);
    CHECK(verify_decomposition(kU, d).all_pass);
}

TEST_CASE("the three-neighbour case glues the pendant hanger") {
    CollapseDatum d = refined_collapse_datum(kThreeNb);
    CHECK(satisfies_refinement(kThreeNb, d));
    auto [first, second] = first_second_end_cells(kThreeNb, d);
    CHECK(neighbours(kThreeNb, second).size() == 3);

    NeighbourhoodCase nc = classify_neighbourhood(kThreeNb, d);
    CHECK(nc.tag == NeighbourhoodTag::pi_empty_e_neighbour_of_ck);
    REQUIRE(nc.b_extra.has_value());
    CHECK(*nc.b_extra == Cell{2, 2});
    CHECK(nc.b_cells.back() == Cell{2, 0});

    Decomposition dec = build_decomposition(kThreeNb, d);
    REQUIRE(dec.glue.has_value());
    CHECK(dec.glue->moved == Cell{2, 2});
    CHECK(dec.glue->slot == Cell{2, 1});
    CHECK(dec.glue->dx == 0);
    CHECK(dec.glue->dy == -1);
    // The glued branch is an L-shape and restores the attack through the slot.
    REQUIRE(dec.qi.size() == 1);
    CHECK(dec.qi[0] == CellSet({{2, 0}, {2, 1}, {3, 0}}));
    CHECK(verify_decomposition(kThreeNb, d).all_pass);
}

TEST_CASE("bridge fixture: the two-neighbour clause alone is not enough") {
    REQUIRE(is_polyomino(kBridge));
    REQUIRE(is_simple(kBridge));
    REQUIRE(is_thin(kBridge));
    REQUIRE(has_s_property(kBridge));
    CHECK(kBridge.size() == 13);

    // Every conforming datum has a three-neighbour second end-cell...
    for (const CollapseDatum& d : collapse_data(kBridge)) {
        if (!is_conforming(kBridge, d)) continue;
        auto [first, second] = first_second_end_cells(kBridge, d);
        CHECK(neighbours(kBridge, second).size() == 3);
    }
    // ...yet the refinement holds through the single-end-cell witness.
    CollapseDatum d = refined_collapse_datum(kBridge);
    NeighbourhoodCase nc = classify_neighbourhood(kBridge, d);
    REQUIRE(nc.b_extra.has_value());
    CHECK(*nc.b_extra == Cell{2, 0});
    Decomposition dec = build_decomposition(kBridge, d);
    CHECK(dec.glue.has_value());
    CHECK(verify_decomposition(kBridge, d).all_pass);

    int depth = -1;
    CollapseDatum found = collapse_search_inductive(kBridge, &depth);
    CHECK(depth == 0);
    CHECK(satisfies_refinement(kBridge, found));
}

TEST_CASE("constructive search recurses when the least datum fails both clauses") {
    REQUIRE(has_s_property(kDeep));
    // The canonically least conforming datum has a three-neighbour second
    // end-cell with no qualifying hanger.
    std::vector<CollapseDatum> data = collapse_data(kDeep);
    const CollapseDatum* least = nullptr;
    for (const CollapseDatum& d : data)
        if (is_conforming(kDeep, d)) {
            least = &d;
            break;
        }
    REQUIRE(least != nullptr);
    CHECK_FALSE(satisfies_refinement(kDeep, *least));

    int depth = -1;
    CollapseDatum d = collapse_search_inductive(kDeep, &depth);
    CHECK(depth == 1);
    CHECK(satisfies_refinement(kDeep, d));
    CHECK(d == refined_collapse_datum(kDeep));
    CHECK(verify_decomposition(kDeep, d).all_pass);
}

TEST_CASE("all four neighbourhood layouts occur in the small sweep") {
    std::map<NeighbourhoodTag, int> tags;
    int pi_with_meet_at_far_end = 0;
    for (int n = 2; n <= 8; ++n)
        fixed_polyominoes(n, [&](const CellSet& p) {
            if (!is_simple(p) || !is_thin(p) || !has_s_property(p)) return;
            for (const CollapseDatum& d : collapse_data(p)) {
                if (!is_conforming(p, d)) continue;
                ++tags[classify_neighbourhood(p, d).tag];
                if (d.pi && first_second_end_cells(p, d).second == d.meet)
                    ++pi_with_meet_at_far_end;
            }
        });
    CHECK(tags[NeighbourhoodTag::pi_nonempty] > 0);
    CHECK(tags[NeighbourhoodTag::pi_empty_e_neighbour_of_ck] > 0);
    CHECK(tags[NeighbourhoodTag::pi_empty_e_endcell] > 0);
    CHECK(tags[NeighbourhoodTag::pi_empty_e_not_neighbour] > 0);
    // The variant where the single cells of I and J sit at opposite ends of J
    // shows up too; classification must handle it.
    CHECK(pi_with_meet_at_far_end > 0);
}

TEST_CASE("general collapse data admit interval-sized PI") {
    // Outside the S-property class the restricted enumeration is off-limits,
    // but the general one still applies.
    CellSet t = shape("###/.#.");
    CHECK_THROWS_AS(collapse_data(t), domain_error);
    std::vector<GeneralCollapseDatum> general = general_collapse_data(t);
    CHECK_FALSE(general.empty());
    for (const GeneralCollapseDatum& g : general) {
        // PI stays inside J and never covers the meet of I and J.
        for (const Cell& c : g.pi) CHECK(g.j.contains(c));
        std::vector<Cell> removed = g.i.cells;
        for (const Cell& c : g.pi) removed.push_back(c);
        CellSet rest = t.without(removed);
        CHECK(is_polyomino(rest));
    }

    // On the S-property class every restricted datum reappears in the
    // general list.
    std::vector<GeneralCollapseDatum> gu = general_collapse_data(kU);
    for (const CollapseDatum& d : collapse_data(kU)) {
        bool found = false;
        for (const GeneralCollapseDatum& g : gu) {
            std::vector<Cell> pi = d.pi ? std::vector<Cell>{*d.pi} : std::vector<Cell>{};
            if (g.i.cells == d.i.cells && g.j.cells == d.j.cells && g.pi == pi) found = true;
        }
        CHECK(found);
    }
    // And the general list can be strictly larger: PI may be a longer
    // sub-interval of J.
    bool longer = false;
    for (const GeneralCollapseDatum& g : gu)
        if (g.pi.size() >= 2) longer = true;
    CHECK(longer);
}

TEST_CASE("identities hold for every conforming datum up to 8 cells") {
    for (int n = 2; n <= 8; ++n)
        fixed_polyominoes(n, [](const CellSet& p) {
            if (!is_simple(p) || !is_thin(p) || !has_s_property(p)) return;
            std::vector<CollapseDatum> data = collapse_data(p);
            CHECK_FALSE(data.empty());
            bool any_refined = false;
            for (const CollapseDatum& d : data) {
                if (!is_conforming(p, d)) continue;
                DecompositionReport rep = verify_decomposition(p, d);
                if (!rep.all_pass)
                    for (const IdentityCheck& c : rep.checks)
                        if (!c.pass) FAIL_CHECK(c.name << " on\n" << to_ascii(p));
                if (!satisfies_refinement(p, d)) continue;
                any_refined = true;
                Decomposition dec = build_decomposition(p, d);
                int sum = 0;
                for (const CellSet& qi : dec.qi) {
                    sum += rook_number(qi);
                    CHECK(is_polyomino(qi));
                    CHECK(is_simple(qi));
                    CHECK(is_thin(qi));
                    CHECK(has_s_property(qi));
                }
                CHECK(sum == rook_number(p) - 2);
            }
            CHECK(any_refined);

            int depth = -1;
            CollapseDatum d = collapse_search_inductive(p, &depth);
            CHECK(depth >= 0);
            CHECK(satisfies_refinement(p, d));
        });
}
