#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "thinpoly/cli.hpp"
#include "thinpoly/enumerate.hpp"
#include "thinpoly/grid.hpp"

using thinpoly::run;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream f(p);
    f << content;
    return p.string();
}

}  // namespace

TEST_CASE("rook command on the worked example") {
    std::string file = write_temp("cli_l.txt", "##\n#.\n");
    Result r = invoke({"rook", file});
    CHECK(r.status == 0);
    CHECK(r.out.find("1 + 3t + t^2") != std::string::npos);
    CHECK(r.out.find("rook number: 2") != std::string::npos);
}

TEST_CASE("inline input uses slashes for rows") {
    Result r = invoke({"rook", "--inline", "##/#."});
    CHECK(r.status == 0);
    CHECK(r.out.find("1 + 3t + t^2") != std::string::npos);
}

TEST_CASE("check reports thinness of the square") {
    Result r = invoke({"check", "--inline", "##/##"});
    CHECK(r.status == 0);
    CHECK(r.out.find("thin: false") != std::string::npos);
    CHECK(r.out.find("simple: true") != std::string::npos);
}

TEST_CASE("cd verdict on the worked example") {
    Result r = invoke({"cd", "--inline", "##/#."});
    CHECK(r.status == 0);
    CHECK(r.out.find("value: 1") != std::string::npos);
    CHECK(r.out.find("sign_ok: true") != std::string::npos);
}

TEST_CASE("json input files are accepted") {
    std::string file = write_temp("cli_l.json", R"({"cells": [[0,0],[0,1],[1,1]]})");
    Result r = invoke({"rook", file});
    CHECK(r.status == 0);
    CHECK(r.out.find("1 + 3t + t^2") != std::string::npos);
}

TEST_CASE("exit codes by error class") {
    CHECK(invoke({"bogus"}).status == 2);
    CHECK(invoke({"rook", "--inline", "#x"}).status == 2);
    CHECK(invoke({"rook", "/nonexistent/file"}).status == 2);
    CHECK(invoke({"cd", "--inline", "##/##"}).status == 3);     // outside the class
    CHECK(invoke({"hpoly", "--inline", "##/##"}).status == 3);
    CHECK(invoke({"collapse", "--inline", "##"}).status == 3);
    CHECK(invoke({"--help"}).status == 0);
}

TEST_CASE("enumerate output re-parses to the same sets") {
    Result r = invoke({"enumerate", "-n", "4"});
    CHECK(r.status == 0);
    // Parse the blank-line separated blocks back and compare.
    std::vector<thinpoly::CellSet> parsed;
    std::string block;
    std::istringstream in(r.out);
    std::string line;
    auto flush = [&] {
        if (!block.empty()) parsed.push_back(thinpoly::parse_ascii(block));
        block.clear();
    };
    while (std::getline(in, line)) {
        if (line.empty()) flush();
        else block += line + "\n";
    }
    flush();
    CHECK(parsed == thinpoly::fixed_polyominoes(4));

    Result filtered = invoke({"enumerate", "-n", "3", "--filter", "s"});
    CHECK(filtered.status == 0);
}

TEST_CASE("text output is identical across runs") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"verify", "-n", "6"},
          std::vector<std::string>{"collapse", "--inline", "#.#/###"}}) {
        Result a = invoke(args);
        Result b = invoke(args);
        CHECK(a.out == b.out);
        CHECK(a.status == b.status);
    }
}

TEST_CASE("enumerate json lists cell arrays") {
    Result r = invoke({"enumerate", "-n", "2", "--format", "json"});
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 2);
}

TEST_CASE("verify exits zero on a clean run") {
    Result r = invoke({"verify", "-n", "5"});
    CHECK(r.status == 0);
    CHECK(r.out.find("total failed: 0") != std::string::npos);
}

TEST_CASE("verify json report matches the shipped schema shape") {
    Result r = invoke({"verify", "-n", "4", "--format", "json"});
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"max_cells", "sizes", "failures", "total_failed"})
        CHECK(j.contains(key));
    CHECK(j["max_cells"].is_number_integer());
    CHECK(j["total_failed"].is_number_integer());
    CHECK(j["sizes"].is_array());
    CHECK(j["failures"].is_array());
    CHECK_FALSE(j.contains("timings"));  // excluded unless requested
    for (const auto& row : j["sizes"])
        for (const char* key : {"n", "generated", "filtered", "checked", "failed"}) {
            CHECK(row.contains(key));
            CHECK(row[key].is_number_integer());
        }
    Result t = invoke({"verify", "-n", "3", "--format", "json", "--timings"});
    CHECK(nlohmann::json::parse(t.out).contains("timings"));
}

TEST_CASE("verify json report is deterministic across jobs") {
    Result a = invoke({"verify", "-n", "7", "--jobs", "1", "--format", "json"});
    Result b = invoke({"verify", "-n", "7", "--jobs", "8", "--format", "json"});
    CHECK(a.status == 0);
    CHECK(b.status == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("oracle command validates h = r") {
    Result r = invoke({"oracle", "--inline", "##/#."});
    CHECK(r.status == 0);
    CHECK(r.out.find("cross_validate: true") != std::string::npos);
    CHECK(r.out.find("H: 1 8 31 85") != std::string::npos);
}

TEST_CASE("trace command prints the recursion") {
    Result r = invoke({"trace", "--inline", "##/#."});
    CHECK(r.status == 0);
    CHECK(r.out.find("value = 1") != std::string::npos);
}

TEST_CASE("hpoly goes through the oracle when asked") {
    Result direct = invoke({"hpoly", "--inline", "#.#/###"});
    Result oracle = invoke({"hpoly", "--oracle", "--inline", "#.#/###"});
    CHECK(direct.status == 0);
    CHECK(oracle.status == 0);
    CHECK(direct.out == oracle.out);
    CHECK(direct.out.find("1 + 5t + 5t^2 + t^3") != std::string::npos);
}

TEST_CASE("oracle dumps the relation matrix as triplets") {
    Result r = invoke({"oracle", "--inline", "#", "--dump-matrix", "2"});
    CHECK(r.status == 0);
    CHECK(r.out == "0 6 1\n0 4 -1\n");
}

TEST_CASE("json output modes parse and carry the right fields") {
    auto check = nlohmann::json::parse(invoke({"check", "--inline", "##/#.", "--format", "json"}).out);
    CHECK(check["s_property"] == true);
    auto cd = nlohmann::json::parse(invoke({"cd", "--inline", "#.#/###", "--format", "json"}).out);
    CHECK(cd["value"] == 0);
    CHECK(cd["parity_zero"] == true);
    auto trace = nlohmann::json::parse(invoke({"trace", "--inline", "##/#.", "--format", "json"}).out);
    CHECK(trace["value"] == 1);
    CHECK(trace["rook"] == nlohmann::json({1, 3, 1}));
    CHECK(trace["children"].empty());
    auto rook = nlohmann::json::parse(invoke({"rook", "--inline", "##/#.", "--format", "json"}).out);
    CHECK(rook["text"] == "1 + 3t + t^2");
    CHECK(rook["rook"] == nlohmann::json({1, 3, 1}));
    auto orc = nlohmann::json::parse(invoke({"oracle", "--inline", "##/#.", "--format", "json"}).out);
    CHECK(orc["H"] == nlohmann::json({1, 8, 31, 85}));
    CHECK(orc["cross_validate"] == true);
    auto col = nlohmann::json::parse(
        invoke({"collapse", "--inline", "#.#/###", "--format", "json"}).out);
    CHECK(col["report"]["all_pass"] == true);
    CHECK(col["case"]["tag"] == "PI_EMPTY_E_NEIGHBOUR_OF_CK");
}

TEST_CASE("enumerate can reduce up to symmetry") {
    Result all = invoke({"enumerate", "-n", "4", "--format", "json"});
    Result reps = invoke({"enumerate", "-n", "4", "--dedup", "symmetry", "--format", "json"});
    CHECK(nlohmann::json::parse(all.out).size() == 19);
    CHECK(nlohmann::json::parse(reps.out).size() == 5);
}
