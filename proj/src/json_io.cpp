#include "thinpoly/json_io.hpp"

namespace thinpoly {

namespace {

ordered_json cell_json(Cell c) { return ordered_json::array({c.x, c.y}); }

ordered_json cells_json(const std::vector<Cell>& cs) {
    ordered_json a = ordered_json::array();
    for (const Cell& c : cs) a.push_back(cell_json(c));
    return a;
}

}  // namespace

ordered_json to_json(const CellSet& p) {
    ordered_json j;
    j["cells"] = cells_json(p.cells());
    return j;
}

ordered_json to_json(const IntPolynomial& f) {
    ordered_json a = ordered_json::array();
    for (std::int64_t c : f.coeffs()) a.push_back(c);
    return a;
}

ordered_json to_json(const InnerInterval& i) {
    ordered_json j;
    j["orientation"] = i.orientation == Orientation::horizontal ? "horizontal" : "vertical";
    j["cells"] = cells_json(i.cells);
    return j;
}

ordered_json to_json(const CollapseDatum& d) {
    ordered_json j;
    j["I"] = to_json(d.i);
    j["J"] = to_json(d.j);
    j["PI"] = d.pi ? ordered_json::array({cell_json(*d.pi)}) : ordered_json::array();
    j["C"] = cell_json(d.single_i);
    j["D"] = cell_json(d.meet);
    j["E"] = cell_json(d.single_j);
    return j;
}

ordered_json to_json(const NeighbourhoodCase& c) {
    ordered_json j;
    j["tag"] = to_string(c.tag);
    j["c_cells"] = cells_json(c.c_cells);
    j["b_cells"] = cells_json(c.b_cells);
    j["b_extra"] = c.b_extra ? cell_json(*c.b_extra) : ordered_json();
    return j;
}

ordered_json to_json(const Decomposition& dec) {
    ordered_json j;
    j["Q"] = to_json(dec.q.normalized());
    j["R"] = to_json(dec.r.normalized());
    ordered_json qi = ordered_json::array();
    for (const CellSet& b : dec.qi) qi.push_back(to_json(b.normalized()));
    j["Qi"] = qi;
    if (dec.glue) {
        ordered_json g;
        g["moved"] = cell_json(dec.glue->moved);
        g["slot"] = cell_json(dec.glue->slot);
        g["translation"] = ordered_json::array({dec.glue->dx, dec.glue->dy});
        j["glue"] = g;
    } else {
        j["glue"] = nullptr;
    }
    return j;
}

ordered_json to_json(const DecompositionReport& rep) {
    ordered_json j;
    ordered_json checks = ordered_json::array();
    for (const IdentityCheck& c : rep.checks) {
        ordered_json e;
        e["name"] = c.name;
        e["lhs"] = c.lhs;
        e["rhs"] = c.rhs;
        e["pass"] = c.pass;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["all_pass"] = rep.all_pass;
    return j;
}

ordered_json to_json(const CdVerdict& v) {
    ordered_json j;
    j["h"] = to_json(v.h);
    j["degree"] = v.degree;
    j["value"] = v.value;
    j["sign_ok"] = v.sign_ok;
    j["parity_zero"] = v.parity_zero;
    return j;
}

ordered_json to_json(const TraceNode& node) {
    ordered_json j;
    j["cells"] = to_json(node.poly)["cells"];
    j["rook"] = to_json(node.rook);
    j["rook_number"] = node.rook_number;
    j["value"] = node.value;
    j["datum"] = node.datum ? to_json(*node.datum) : ordered_json();
    j["identities"] = to_json(node.report)["checks"];
    ordered_json children = ordered_json::array();
    for (const TraceNode& c : node.children) children.push_back(to_json(c));
    j["children"] = children;
    return j;
}

ordered_json to_json(const HilbertProfile& prof) {
    ordered_json j;
    j["H"] = prof.h_function;
    j["krull_dim"] = prof.krull_dim;
    j["h"] = to_json(prof.h);
    return j;
}

ordered_json to_json(const BatchReport& rep, bool include_timings) {
    ordered_json j;
    j["max_cells"] = rep.max_cells;
    ordered_json sizes = ordered_json::array();
    for (const SizeRow& r : rep.sizes) {
        ordered_json e;
        e["n"] = r.n;
        e["generated"] = r.generated;
        e["filtered"] = r.filtered;
        e["checked"] = r.checked;
        e["failed"] = r.failed;
        sizes.push_back(e);
    }
    j["sizes"] = sizes;
    ordered_json fails = ordered_json::array();
    for (const Failure& f : rep.failures) {
        ordered_json e;
        e["suite"] = to_string(f.suite);
        e["cells"] = f.ascii;
        e["message"] = f.message;
        fails.push_back(e);
    }
    j["failures"] = fails;
    j["total_failed"] = rep.total_failed;
    if (include_timings) {
        ordered_json t;
        for (const auto& [name, ms] : rep.timings) t[name] = ms;
        j["timings"] = t;
    }
    return j;
}

}  // namespace thinpoly
