#include "thinpoly/cd.hpp"

#include "thinpoly/grid.hpp"
#include "thinpoly/intervals.hpp"
#include "thinpoly/rook.hpp"

namespace thinpoly {

IntPolynomial h_polynomial(const CellSet& p) {
    if (p.empty()) throw unsupported_input("h-polynomial of an empty collection");
    for (const CellSet& comp : components(p))
        if (!is_simple(comp) || !is_thin(comp))
            throw unsupported_input(
                "h = r holds for simple thin components only; use the Hilbert oracle instead");
    return rook_polynomial(p);
}

std::int64_t cd_value(const IntPolynomial& h) {
    if (h.is_zero()) throw domain_error("sign value of the zero polynomial");
    int half = h.degree() / 2;
    std::int64_t sign = half % 2 == 0 ? 1 : -1;
    return sign * h.evaluate(-1);
}

CdVerdict is_cd(const CellSet& p) {
    if (p.empty()) throw unsupported_input("empty collection");
    for (const CellSet& comp : components(p))
        if (!is_simple(comp) || !is_thin(comp) || !has_s_property(comp))
            throw unsupported_input("every component must be simple thin with the S-property");

    CdVerdict v;
    v.h = rook_polynomial(p);
    v.degree = v.h.degree();
    v.value = cd_value(v.h);
    v.sign_ok = v.value >= 0;
    v.parity_zero = v.degree % 2 == 0 || v.value == 0;
    if (!v.sign_ok)
        throw theorem_violation("negative sign value on " + to_ascii(p) + " h = " +
                                v.h.to_string());
    if (!v.parity_zero)
        throw theorem_violation("odd-degree h with nonzero h(-1) on " + to_ascii(p));
    return v;
}

namespace {

TraceNode trace_node(const CellSet& p) {
    TraceNode node;
    node.poly = p.normalized();
    node.rook = rook_polynomial(p);
    node.rook_number = node.rook.degree();

    if (node.rook_number % 2 == 1) {
        // Odd rook number forces h(-1) = 0; the node is a leaf of value zero.
        if (node.rook.evaluate(-1) != 0)
            throw theorem_violation("odd rook number with nonzero value at -1 on " + to_ascii(p));
        node.value = 0;
    } else {
        CollapseDatum d = refined_collapse_datum(p);
        node.datum = d;
        node.report = verify_decomposition(p, d);
        if (!node.report.all_pass)
            throw theorem_violation("decomposition identity failed on " + to_ascii(p));
        Decomposition dec = build_decomposition(p, d);

        std::int64_t branch_product = 1;
        node.value = 1;
        for (const CellSet& qi : dec.qi) {
            TraceNode child = trace_node(qi);
            branch_product *= child.rook.evaluate(-1);
            node.value *= child.value;
            node.children.push_back(std::move(child));
        }
        // The (1+t) factor kills r(R) at t = -1.
        if (node.rook.evaluate(-1) != -branch_product)
            throw theorem_violation("value at -1 does not match the branch product on " +
                                    to_ascii(p));
    }

    if (node.value != cd_value(node.rook))
        throw theorem_violation("recursion value disagrees with direct evaluation on " +
                                to_ascii(p));
    return node;
}

}  // namespace

DecompositionTree theorem_trace(const CellSet& p) {
    if (!is_polyomino(p) || !is_simple(p) || !is_thin(p) || !has_s_property(p))
        throw domain_error("trace requires a connected simple thin polyomino with the S-property");
    return trace_node(p);
}

}  // namespace thinpoly
