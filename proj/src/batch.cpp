#include "thinpoly/batch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

#include "thinpoly/cd.hpp"
#include "thinpoly/collapse.hpp"
#include "thinpoly/enumerate.hpp"
#include "thinpoly/grid.hpp"
#include "thinpoly/intervals.hpp"
#include "thinpoly/rook.hpp"

namespace thinpoly {

std::string to_string(Suite s) {
    switch (s) {
        case Suite::deletion: return "deletion";
        case Suite::collapse: return "collapse";
        case Suite::trace: return "trace";
        case Suite::cd: return "cd";
        default: return "oracle";
    }
}

std::optional<Suite> suite_from_string(const std::string& name) {
    for (Suite s : {Suite::deletion, Suite::collapse, Suite::trace, Suite::cd, Suite::oracle})
        if (to_string(s) == name) return s;
    return std::nullopt;
}

namespace {

struct ClassFlags {
    bool simple = false;
    bool thin = false;
    bool s_property = false;
};

ClassFlags classify(const CellSet& p) {
    ClassFlags f;
    f.simple = is_simple(p);
    f.thin = is_thin(p);
    f.s_property = f.simple && f.thin && has_s_property(p);
    return f;
}

// Both halves of the deletion identity, for every single cell.
std::optional<std::string> run_deletion(const CellSet& p) {
    IntPolynomial rp = rook_polynomial(p);
    for (const Cell& c : single_cells(p)) {
        std::vector<InnerInterval> ivs = intervals_containing(p, c);
        if (ivs.size() != 1) return "single cell with several intervals at " + to_string(c);
        IntPolynomial no_c = restricted_rook_polynomial(p, {c});
        IntPolynomial no_i = restricted_rook_polynomial(p, ivs[0].cells);
        if (rp != no_c + no_i.shifted(1))
            return "deletion identity failed at " + to_string(c);
        if (rook_polynomial_through(p, c) != no_i.shifted(1))
            return "rook-at-cell identity failed at " + to_string(c);
    }
    return std::nullopt;
}

std::optional<std::string> run_collapse(const CellSet& p) {
    std::vector<CollapseDatum> data = collapse_data(p);
    if (data.empty()) return std::string("no collapse datum");
    CollapseDatum refined = refined_collapse_datum(p);
    if (!satisfies_refinement(p, refined)) return std::string("refined datum fails its own filter");
    int depth = 0;
    CollapseDatum inductive = collapse_search_inductive(p, &depth);
    if (!satisfies_refinement(p, inductive))
        return std::string("inductive datum fails the refinement");
    for (const CollapseDatum& d : data) {
        if (!is_conforming(p, d)) continue;
        DecompositionReport rep = verify_decomposition(p, d);
        if (!rep.all_pass) {
            for (const IdentityCheck& c : rep.checks)
                if (!c.pass) return "identity '" + c.name + "' failed: " + c.lhs + " vs " + c.rhs;
        }
    }
    return std::nullopt;
}

std::optional<std::string> run_trace(const CellSet& p) {
    DecompositionTree tree = theorem_trace(p);
    if (tree.value != cd_value(rook_polynomial(p)))
        return std::string("trace value disagrees with direct evaluation");
    return std::nullopt;
}

std::optional<std::string> run_cd(const CellSet& p) {
    CdVerdict v = is_cd(p);
    if (!v.sign_ok) return std::string("negative sign value");
    if (!v.parity_zero) return std::string("odd degree with nonzero value");
    return std::nullopt;
}

std::optional<std::string> run_oracle(const CellSet& p, const OracleOptions& opts) {
    if (!cross_validate(p, opts)) return std::string("Hilbert h differs from the rook polynomial");
    return std::nullopt;
}

struct PolyOutcome {
    int checked = 0;
    std::vector<Failure> failures;
};

PolyOutcome run_suites(const CellSet& p, const EnumerationConfig& cfg) {
    PolyOutcome out;
    ClassFlags f = classify(p);
    auto run = [&](Suite s, bool applicable, const std::function<std::optional<std::string>()>& fn) {
        if (!cfg.checks.count(s) || !applicable) return;
        ++out.checked;
        std::optional<std::string> msg;
        try {
            msg = fn();
        } catch (const std::exception& e) {
            msg = std::string(e.what());
        }
        if (msg) out.failures.push_back({s, to_ascii(p), *msg});
    };

    run(Suite::deletion, f.simple && f.thin, [&] { return run_deletion(p); });
    run(Suite::collapse, f.s_property && p.size() >= 2, [&] { return run_collapse(p); });
    run(Suite::trace, f.s_property, [&] { return run_trace(p); });
    run(Suite::cd, f.s_property, [&] { return run_cd(p); });
    run(Suite::oracle, f.simple && f.thin && p.size() <= cfg.oracle_max_cells,
        [&] { return run_oracle(p, cfg.oracle); });
    return out;
}

}  // namespace

BatchReport batch_verify(const EnumerationConfig& config) {
    if (config.max_cells < 1) throw domain_error("max_cells must be at least 1");
    BatchReport report;
    report.max_cells = config.max_cells;

    using clock = std::chrono::steady_clock;
    double enum_ms = 0, check_ms = 0;

    for (int n = 1; n <= config.max_cells; ++n) {
        SizeRow row;
        row.n = n;

        auto t0 = clock::now();
        std::vector<CellSet> polys = fixed_polyominoes(n);
        row.generated = static_cast<std::int64_t>(polys.size());
        if (config.dedup == Dedup::up_to_symmetry) polys = dedup_up_to_symmetry(polys);
        polys = filter_class(polys, config.filters);
        row.filtered = static_cast<std::int64_t>(polys.size());
        auto t1 = clock::now();
        enum_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();

        // Workers pull indices; outcomes land in their slot, so the merged
        // report is identical for any degree of parallelism.
        std::vector<PolyOutcome> outcomes(polys.size());
        int jobs = std::max(1, config.parallelism);
        if (jobs == 1) {
            for (size_t i = 0; i < polys.size(); ++i) outcomes[i] = run_suites(polys[i], config);
        } else {
            std::atomic<size_t> next{0};
            std::vector<std::thread> workers;
            for (int w = 0; w < jobs; ++w)
                workers.emplace_back([&] {
                    for (size_t i = next.fetch_add(1); i < polys.size(); i = next.fetch_add(1))
                        outcomes[i] = run_suites(polys[i], config);
                });
            for (std::thread& t : workers) t.join();
        }
        for (const PolyOutcome& o : outcomes) {
            row.checked += o.checked;
            row.failed += static_cast<std::int64_t>(o.failures.size());
            for (const Failure& f : o.failures) report.failures.push_back(f);
        }
        auto t2 = clock::now();
        check_ms += std::chrono::duration<double, std::milli>(t2 - t1).count();

        report.total_failed += row.failed;
        report.sizes.push_back(row);
    }

    report.timings = {{"enumerate", enum_ms}, {"check", check_ms}};
    return report;
}

void write_failure_fixtures(const BatchReport& report, const std::string& dir) {
    std::filesystem::create_directories(dir);
    int i = 0;
    for (const Failure& f : report.failures) {
        std::string name = "failure_" + std::to_string(i++) + "_" + to_string(f.suite) + ".txt";
        std::ofstream out(std::filesystem::path(dir) / name);
        out << f.ascii;
    }
}

}  // namespace thinpoly
