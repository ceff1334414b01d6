// Batch execution of the check suites over exhaustively enumerated
// polyominoes, with deterministic merging regardless of parallelism.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "thinpoly/cell.hpp"
#include "thinpoly/enumerate.hpp"
#include "thinpoly/hilbert.hpp"

namespace thinpoly {

enum class Suite { deletion, collapse, trace, cd, oracle };

std::string to_string(Suite s);
std::optional<Suite> suite_from_string(const std::string& name);

enum class Dedup { translation_only, up_to_symmetry };

struct EnumerationConfig {
    int max_cells = 10;
    Dedup dedup = Dedup::translation_only;
    ClassFilters filters;                 // restricts the enumeration universe
    std::set<Suite> checks = {Suite::deletion, Suite::collapse, Suite::trace, Suite::cd};
    int parallelism = 1;
    int oracle_max_cells = 6;             // the oracle suite stops above this
    OracleOptions oracle;
};

struct SizeRow {
    int n = 0;
    std::int64_t generated = 0;
    std::int64_t filtered = 0;  // survivors of the universe filters
    std::int64_t checked = 0;   // polyomino/suite pairs actually run
    std::int64_t failed = 0;
};

struct Failure {
    Suite suite;
    std::string ascii;   // replayable fixture
    std::string message;
};

struct BatchReport {
    int max_cells = 0;
    std::vector<SizeRow> sizes;
    std::vector<Failure> failures;
    std::int64_t total_failed = 0;
    // Wall-clock per phase, milliseconds; excluded from serialized reports by
    // default so reruns compare byte-identical.
    std::vector<std::pair<std::string, double>> timings;
};

BatchReport batch_verify(const EnumerationConfig& config);

// Writes each failure fixture as an ASCII grid file under dir.
void write_failure_fixtures(const BatchReport& report, const std::string& dir);

}  // namespace thinpoly
