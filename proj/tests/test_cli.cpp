// Copyright (c) tfstatus contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "support.hpp"
#include "tfstatus/cli.hpp"
#include "tfstatus/transfinite_model.hpp"

using namespace tfstatus;
using tfstatus::testing::golden_path;
using tfstatus::testing::read_file;
using tfstatus::testing::sample_path;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("tfstatus_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST_CASE("status goldens") {
    for (const std::string g : {"g1", "g2", "g3"}) {
        CAPTURE(g);
        const auto text = run({"status", sample_path(g + ".json")});
        CHECK(text.code == exit_ok);
        CHECK(text.out == read_file(golden_path(g + "_status.txt")));
        const auto json = run({"status", sample_path(g + ".json"), "--json"});
        CHECK(json.code == exit_ok);
        CHECK(json.out == read_file(golden_path(g + "_status.json")));
        CHECK(nlohmann::json::accept(json.out));
        const auto dot = run({"replace", sample_path(g + ".json"), "--dot"});
        CHECK(dot.out == read_file(golden_path(g + "_replacement.dot")));
    }
}

TEST_CASE("status of one node") {
    const auto y1 = run({"status", sample_path("g3.json"), "--node", "y1"});
    CHECK(y1.code == exit_ok);
    CHECK(y1.out == "y1: w*10\n");
    const auto z1 = run({"status", sample_path("g3_singleton.json"), "--node", "z1", "--json"});
    CHECK(z1.code == exit_ok);
    CHECK(nlohmann::json::parse(z1.out)["status"] == "w*15");
    CHECK(run({"status", sample_path("g3.json"), "--node", "nope"}).code == exit_input_error);
    CHECK(run({"status", sample_path("g3_singleton.json"), "--node", "Z"}).code == exit_input_error);
    CHECK(run({"status", sample_path("path4.json"), "--node", "v2"}).out == "v2: 4\n");
}

TEST_CASE("validate") {
    const auto bad = run({"validate", sample_path("g3_conditionA_violation.json")});
    CHECK(bad.code == exit_failed);
    CHECK(bad.out == read_file(golden_path("g3_conditionA_violation_validate.txt")));
    const auto walk = run({"validate", sample_path("g3_conditionA_violation.json"), "--walk-based"});
    CHECK(walk.code == exit_ok);
    const auto json = run({"validate", sample_path("g3_conditionA_violation.json"), "--json"});
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed["passed"] == false);
    CHECK(parsed["violations"].size() == 1);
    CHECK(parsed["violations"][0]["condition"] == "4.3");
    CHECK(run({"validate", sample_path("path4.json")}).code == exit_ok);
    const auto split = write_temp("split.json", R"({"rank": 0, "nodes": ["a", "b"], "edges": []})");
    CHECK(run({"validate", split}).code == exit_failed);
}

TEST_CASE("status refuses invalid graphs unless walk-based") {
    CHECK(run({"status", sample_path("g3_conditionA_violation.json")}).code == exit_failed);
    const auto walk = run({"status", sample_path("g3_conditionA_violation.json"), "--walk-based"});
    CHECK(walk.code == exit_ok);
    CHECK(walk.out == read_file(golden_path("g3_status.txt")));
}

TEST_CASE("replace") {
    const auto text = run({"replace", sample_path("g3.json")});
    CHECK(text.code == exit_ok);
    CHECK(text.out.find("y2 <- section S2\n") != std::string::npos);
    const auto json = run({"replace", sample_path("g1.json"), "--json"});
    const auto doc = parse_document(json.out);
    REQUIRE(std::holds_alternative<FiniteGraph>(doc));
    CHECK(to_dot(std::get<FiniteGraph>(doc)) == read_file(golden_path("g1_replacement.dot")));
    CHECK(run({"replace", sample_path("g1.json"), "--json", "--dot"}).code == exit_input_error);
    CHECK(run({"replace", sample_path("path4.json")}).code == exit_input_error);
}

TEST_CASE("bounds") {
    const auto b = run({"bounds", sample_path("g3.json"), "--json"});
    CHECK(b.code == exit_ok);
    const auto j = nlohmann::json::parse(b.out);
    CHECK(j["lower"] == "w*4");
    CHECK(j["upper"] == "w*10");
    CHECK(j["achieved_upper"] == nlohmann::json::array({"y1", "y3"}));
    CHECK(run({"bounds", sample_path("path4.json")}).out.find("upper: 6\n") != std::string::npos);
}

TEST_CASE("ejs-check") {
    const auto ok = run({"ejs-check", sample_path("path4.json")});
    CHECK(ok.code == exit_ok);
    CHECK(ok.out.find("bounds: [3, 6]") != std::string::npos);
    const auto split = write_temp("split2.json", R"({"rank": 0, "nodes": ["a", "b"], "edges": []})");
    CHECK(run({"ejs-check", split}).code == exit_failed);
    CHECK(run({"ejs-check", sample_path("g1.json")}).code == exit_input_error);
}

TEST_CASE("verify-ejs") {
    const auto r = run({"verify-ejs", "--max-p", "5"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == read_file(golden_path("verify_ejs_5.txt")));
    CHECK(r.out.find("checked 772 graphs, 0 violations\n") != std::string::npos);
    CHECK(run({"verify-ejs", "--max-p", "8"}).code == exit_input_error);
    CHECK(run({"verify-ejs", "--max-p", "0"}).code == exit_input_error);
    CHECK(run({"verify-ejs"}).code == exit_input_error);
}

TEST_CASE("extremal") {
    const auto r = run({"extremal", "--p", "4", "--q", "4", "--json"});
    CHECK(r.code == exit_ok);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["lower"]["node"] == "v1");
    CHECK(j["lower"]["status"] == 3);
    CHECK(j["upper"]["node"] == "v4");
    CHECK(j["upper"]["status"] == 5);
    CHECK(std::holds_alternative<FiniteGraph>(parse_document(j["upper"]["graph"].dump())));
    CHECK(run({"extremal", "--p", "4", "--q", "2"}).code == exit_input_error);
    CHECK(run({"extremal", "--p", "4"}).code == exit_input_error);
}

TEST_CASE("argument and input errors") {
    CHECK(run({}).code == exit_input_error);
    CHECK(run({"frobnicate"}).code == exit_input_error);
    CHECK(run({"status", sample_path("g1.json"), "--bogus"}).code == exit_input_error);
    CHECK(run({"status", "/nonexistent/file.json"}).code == exit_input_error);
    const auto malformed = write_temp("malformed.json", "{\"rank\": 1, ");
    const auto m = run({"status", malformed});
    CHECK(m.code == exit_input_error);
    CHECK(m.err.rfind("error: syntax error", 0) == 0);
    CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("output is deterministic") {
    for (const std::vector<std::string> args :
         {std::vector<std::string>{"status", sample_path("g3_singleton.json"), "--json"},
          std::vector<std::string>{"replace", sample_path("g3_singleton.json"), "--dot"},
          std::vector<std::string>{"extremal", "--p", "5", "--q", "6"}}) {
        CHECK(run(args).out == run(args).out);
    }
}
