#include "thinpoly/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "thinpoly/batch.hpp"
#include "thinpoly/cd.hpp"
#include "thinpoly/collapse.hpp"
#include "thinpoly/enumerate.hpp"
#include "thinpoly/grid.hpp"
#include "thinpoly/hilbert.hpp"
#include "thinpoly/intervals.hpp"
#include "thinpoly/json_io.hpp"
#include "thinpoly/rook.hpp"

namespace thinpoly {

namespace {

struct CommonOpts {
    std::string file;
    std::string inline_ascii;
    std::string format = "text";
};

CellSet load_input(const CommonOpts& o) {
    std::string text;
    if (!o.inline_ascii.empty()) {
        text = o.inline_ascii;
        // Allow '/' as a row separator so shapes fit on a command line.
        for (char& c : text)
            if (c == '/') c = '\n';
    } else {
        std::ifstream in(o.file);
        if (!in) throw parse_error("cannot open " + o.file);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_cells_json(text);
    return parse_ascii(text);
}

void add_input_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("file", o.file, "input file (ASCII grid or JSON)");
    cmd->add_option("--inline", o.inline_ascii, "inline ASCII ('/' separates rows)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

std::string ascii_one_line(const CellSet& p) {
    std::string s = to_ascii(p);
    for (char& c : s)
        if (c == '\n') c = '/';
    if (!s.empty() && s.back() == '/') s.pop_back();
    return s;
}

OracleOptions oracle_options_from_env() {
    OracleOptions opts;
    if (const char* env = std::getenv("THINPOLY_ORACLE_BUDGET")) {
        try {
            opts.budget = std::stoll(env);
        } catch (const std::exception&) {
            throw parse_error("THINPOLY_ORACLE_BUDGET must be an integer");
        }
    }
    return opts;
}

int cmd_check(const CommonOpts& o, std::ostream& out) {
    CellSet p = load_input(o);
    bool poly = is_polyomino(p);
    bool simple = poly && is_simple(p);
    bool thin = is_thin(p);
    bool s = simple && thin && has_s_property(p);
    ordered_json j;
    j["cells"] = p.size();
    j["polyomino"] = poly;
    j["simple"] = poly ? ordered_json(simple) : ordered_json();
    j["thin"] = thin;
    j["s_property"] = (simple && thin) ? ordered_json(s) : ordered_json();
    j["koszul"] = poly ? ordered_json(simple) : ordered_json();
    j["gorenstein"] = (simple && thin) ? ordered_json(s) : ordered_json();
    if (o.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [k, v] : j.items())
            out << k << ": " << (v.is_null() ? "n/a" : v.dump()) << "\n";
    }
    return 0;
}

int cmd_rook(const CommonOpts& o, std::ostream& out) {
    CellSet p = load_input(o);
    IntPolynomial r = rook_polynomial(p);
    if (o.format == "json") {
        ordered_json j;
        j["rook"] = to_json(r);
        j["rook_number"] = r.degree();
        j["text"] = r.to_string();
        out << j.dump(2) << "\n";
    } else {
        out << r.to_string() << "\n";
        out << "rook number: " << r.degree() << "\n";
    }
    return 0;
}

int cmd_hpoly(const CommonOpts& o, bool via_oracle, std::ostream& out) {
    CellSet p = load_input(o);
    IntPolynomial h;
    if (via_oracle) {
        HilbertProfile prof = hilbert_profile(p, oracle_options_from_env());
        h = prof.h;
    } else {
        h = h_polynomial(p);
    }
    if (o.format == "json") {
        ordered_json j;
        j["h"] = to_json(h);
        j["text"] = h.to_string();
        out << j.dump(2) << "\n";
    } else {
        out << h.to_string() << "\n";
    }
    return 0;
}

int cmd_cd(const CommonOpts& o, std::ostream& out) {
    CellSet p = load_input(o);
    CdVerdict v = is_cd(p);
    if (o.format == "json") {
        out << to_json(v).dump(2) << "\n";
    } else if (o.format == "csv") {
        out << "cells,rook_number,h,cd_value,verdict\n";
        out << ascii_one_line(p) << "," << v.degree << ",\"" << v.h.to_string() << "\","
            << v.value << "," << (v.sign_ok ? "ok" : "VIOLATION") << "\n";
    } else {
        out << "h = " << v.h.to_string() << "\n";
        out << "degree: " << v.degree << "\n";
        out << "value: " << v.value << "\n";
        out << "sign_ok: " << (v.sign_ok ? "true" : "false") << "\n";
        out << "parity_zero: " << (v.parity_zero ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_collapse(const CommonOpts& o, std::ostream& out) {
    CellSet p = load_input(o);
    CollapseDatum d = refined_collapse_datum(p);
    NeighbourhoodCase nc = classify_neighbourhood(p, d);
    Decomposition dec = build_decomposition(p, d);
    DecompositionReport rep = verify_decomposition(p, d);
    ordered_json j;
    j["datum"] = to_json(d);
    j["case"] = to_json(nc);
    j["decomposition"] = to_json(dec);
    j["report"] = to_json(rep);
    if (o.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        out << "I: " << to_json(d.i)["cells"].dump() << "\n";
        out << "J: " << to_json(d.j)["cells"].dump() << "\n";
        out << "PI: " << to_json(d)["PI"].dump() << "\n";
        out << "case: " << to_string(nc.tag) << "\n";
        out << "branches: " << dec.qi.size() << "\n";
        for (const IdentityCheck& c : rep.checks)
            out << (c.pass ? "pass" : "FAIL") << "  " << c.name << "\n";
    }
    return rep.all_pass ? 0 : 4;
}

int cmd_trace(const CommonOpts& o, std::ostream& out) {
    CellSet p = load_input(o);
    DecompositionTree tree = theorem_trace(p);
    if (o.format == "json") {
        out << to_json(tree).dump(2) << "\n";
    } else {
        std::function<void(const TraceNode&, int)> show = [&](const TraceNode& n, int depth) {
            out << std::string(2 * depth, ' ') << "r = " << n.rook.to_string()
                << "  value = " << n.value << "\n";
            for (const TraceNode& c : n.children) show(c, depth + 1);
        };
        show(tree, 0);
    }
    return 0;
}

int cmd_oracle(const CommonOpts& o, int dump_degree, std::ostream& out) {
    CellSet p = load_input(o);
    OracleOptions opts = oracle_options_from_env();
    if (dump_degree >= 2) {
        dump_relation_matrix(p, dump_degree, out, opts);
        return 0;
    }
    HilbertProfile prof = hilbert_profile(p, opts);
    bool ok = cross_validate(p, opts);
    if (o.format == "json") {
        ordered_json j = to_json(prof);
        j["cross_validate"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << "H:";
        for (std::int64_t v : prof.h_function) out << " " << v;
        out << "\n";
        out << "krull_dim: " << prof.krull_dim << "\n";
        out << "h = " << prof.h.to_string() << "\n";
        out << "cross_validate: " << (ok ? "true" : "false") << "\n";
    }
    return ok ? 0 : 4;
}

int cmd_enumerate(int n, const std::vector<std::string>& filters, const std::string& dedup,
                  const std::string& format, std::ostream& out) {
    ClassFilters f;
    for (const std::string& name : filters) {
        if (name == "simple") f.simple = true;
        else if (name == "thin") f.thin = true;
        else if (name == "s") f.s_property = true;
        else throw parse_error("unknown filter: " + name);
    }
    std::vector<CellSet> polys = fixed_polyominoes(n);
    if (dedup == "symmetry") polys = dedup_up_to_symmetry(polys);
    polys = filter_class(polys, f);
    if (format == "json") {
        ordered_json j = ordered_json::array();
        for (const CellSet& p : polys) j.push_back(to_json(p));
        out << j.dump(2) << "\n";
    } else {
        for (const CellSet& p : polys) out << to_ascii(p) << "\n";
    }
    return 0;
}

int cmd_verify(const EnumerationConfig& cfg, const std::string& format, const std::string& out_dir,
               bool timings, std::ostream& out, std::ostream& err) {
    BatchReport rep = batch_verify(cfg);
    if (!out_dir.empty() && !rep.failures.empty()) {
        write_failure_fixtures(rep, out_dir);
        err << "failure fixtures written to " << out_dir << "\n";
    }
    if (format == "json") {
        out << to_json(rep, timings).dump(2) << "\n";
    } else if (format == "csv") {
        out << "n,generated,filtered,checked,failed\n";
        for (const SizeRow& r : rep.sizes)
            out << r.n << "," << r.generated << "," << r.filtered << "," << r.checked << ","
                << r.failed << "\n";
    } else {
        for (const SizeRow& r : rep.sizes)
            out << "n=" << r.n << " generated=" << r.generated << " filtered=" << r.filtered
                << " checked=" << r.checked << " failed=" << r.failed << "\n";
        out << "total failed: " << rep.total_failed << "\n";
        if (timings)
            for (const auto& [name, ms] : rep.timings)
                out << "phase " << name << ": " << ms << " ms\n";
        for (const Failure& f : rep.failures)
            out << "FAIL [" << to_string(f.suite) << "] " << f.message << "\n"
                << f.ascii << "\n";
    }
    return rep.total_failed == 0 ? 0 : 4;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"combinatorics toolkit for simple thin polyominoes"};
    app.require_subcommand(1);

    CommonOpts check_o, rook_o, hpoly_o, cd_o, collapse_o, trace_o, oracle_o;
    bool hpoly_oracle = false;
    int oracle_dump = 0;

    add_input_opts(app.add_subcommand("check", "class predicates for one shape"), check_o);
    add_input_opts(app.add_subcommand("rook", "rook polynomial and rook number"), rook_o);
    CLI::App* hp = app.add_subcommand("hpoly", "h-polynomial");
    add_input_opts(hp, hpoly_o);
    hp->add_flag("--oracle", hpoly_oracle, "compute via the Hilbert oracle");
    add_input_opts(app.add_subcommand("cd", "sign verdict"), cd_o);
    add_input_opts(app.add_subcommand("collapse", "refined collapse datum and decomposition"),
                   collapse_o);
    add_input_opts(app.add_subcommand("trace", "decomposition recursion trace"), trace_o);
    CLI::App* orc = app.add_subcommand("oracle", "Hilbert-function validation");
    add_input_opts(orc, oracle_o);
    orc->add_option("--dump-matrix", oracle_dump, "dump the relation matrix of this degree");

    CLI::App* en = app.add_subcommand("enumerate", "stream fixed polyominoes");
    int en_n = 1;
    std::vector<std::string> en_filters;
    std::string en_dedup = "translation", en_format = "text";
    en->add_option("-n,--cells", en_n, "cell count")->required();
    en->add_option("--filter", en_filters, "simple, thin, s");
    en->add_option("--dedup", en_dedup, "translation or symmetry")
        ->check(CLI::IsMember({"translation", "symmetry"}));
    en->add_option("--format", en_format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* ver = app.add_subcommand("verify", "run check suites over all polyominoes");
    int ver_n = 10, ver_jobs = 1, ver_oracle_cells = 6;
    std::vector<std::string> ver_suites, ver_filters;
    std::string ver_dedup = "translation", ver_format = "text", ver_out;
    bool ver_timings = false;
    ver->add_option("-n,--cells", ver_n, "maximum cell count")->required();
    ver->add_option("--suites", ver_suites, "deletion, collapse, trace, cd, oracle");
    ver->add_option("--filter", ver_filters, "simple, thin, s");
    ver->add_option("--jobs", ver_jobs, "worker threads");
    ver->add_option("--dedup", ver_dedup)->check(CLI::IsMember({"translation", "symmetry"}));
    ver->add_option("--format", ver_format)->check(CLI::IsMember({"text", "json", "csv"}));
    ver->add_option("--out", ver_out, "directory for failure fixtures");
    ver->add_option("--oracle-cells", ver_oracle_cells, "cell ceiling for the oracle suite");
    ver->add_flag("--timings", ver_timings, "include wall-clock timings in the report");

    std::vector<std::string> argv_copy = args;
    std::reverse(argv_copy.begin(), argv_copy.end());
    try {
        app.parse(argv_copy);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (app.got_subcommand("check")) return cmd_check(check_o, out);
        if (app.got_subcommand("rook")) return cmd_rook(rook_o, out);
        if (app.got_subcommand("hpoly")) return cmd_hpoly(hpoly_o, hpoly_oracle, out);
        if (app.got_subcommand("cd")) return cmd_cd(cd_o, out);
        if (app.got_subcommand("collapse")) return cmd_collapse(collapse_o, out);
        if (app.got_subcommand("trace")) return cmd_trace(trace_o, out);
        if (app.got_subcommand("oracle")) return cmd_oracle(oracle_o, oracle_dump, out);
        if (app.got_subcommand("enumerate"))
            return cmd_enumerate(en_n, en_filters, en_dedup, en_format, out);
        if (app.got_subcommand("verify")) {
            EnumerationConfig cfg;
            cfg.max_cells = ver_n;
            cfg.parallelism = ver_jobs;
            cfg.oracle_max_cells = ver_oracle_cells;
            cfg.dedup = ver_dedup == "symmetry" ? Dedup::up_to_symmetry : Dedup::translation_only;
            for (const std::string& name : ver_filters) {
                if (name == "simple") cfg.filters.simple = true;
                else if (name == "thin") cfg.filters.thin = true;
                else if (name == "s") cfg.filters.s_property = true;
                else throw parse_error("unknown filter: " + name);
            }
            if (!ver_suites.empty()) {
                cfg.checks.clear();
                for (const std::string& name : ver_suites) {
                    std::optional<Suite> s = suite_from_string(name);
                    if (!s) throw parse_error("unknown suite: " + name);
                    cfg.checks.insert(*s);
                }
            }
            cfg.oracle = oracle_options_from_env();
            return cmd_verify(cfg, ver_format, ver_out, ver_timings, out, err);
        }
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const theorem_violation& e) {
        err << "theorem violation: " << e.what() << "\n";
        return 4;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const unsupported_input& e) {
        err << "unsupported input: " << e.what() << "\n";
        return 3;
    } catch (const resource_error& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace thinpoly
