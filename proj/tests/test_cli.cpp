#include "azi/cli.hpp"

#include "azi/canonical.hpp"
#include "azi/families.hpp"
#include "azi/graph6.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace azi;

namespace {

struct RunResult {
    int status = 0;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& argv, const std::string& stdin_text = "") {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    int status = azi::cli::run(argv, out, err, in);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("compute azi on a family prints fraction and decimal") {
    auto r = run_cli({"compute", "--index", "azi", "--family", "g0:5,2"});
    CHECK(r.status == 0);
    CHECK(r.out == "48\n48.0\n");
    auto r2 = run_cli({"compute", "--index", "azi", "--family", "tplus:10"});
    CHECK(r2.out == "4825/64\n75.390625\n");
}

TEST_CASE("compute abc prints the shortest round-trip decimal") {
    auto r = run_cli({"compute", "--index", "abc", "--family", "path:4"});
    CHECK(r.status == 0);
    CHECK(r.out == "2.121320343559643\n");
}

TEST_CASE("compute reads graph6 from stdin, one result per line") {
    auto r = run_cli({"compute", "--index", "azi", "--graph6", "-"}, "Ch\nCs\n");
    CHECK(r.status == 0);
    CHECK(r.out == "24\n24.0\n81/8\n10.125\n");
}

TEST_CASE("K2 on stdin is a domain error: exit 2") {
    auto r = run_cli({"compute", "--index", "azi", "--graph6", "-"}, "A_\n");
    CHECK(r.status == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("UnsupportedGraph") != std::string::npos);
}

TEST_CASE("usage errors exit 2 with help text on stderr") {
    auto r = run_cli({"compute", "--no-such-flag"});
    CHECK(r.status == 2);
    auto r2 = run_cli({"frobnicate"});
    CHECK(r2.status == 2);
    auto r3 = run_cli({});
    CHECK(r3.status == 2);
    // Both seed flags at once, or neither, is a usage error.
    auto r4 = run_cli({"compute", "--index", "azi"});
    CHECK(r4.status == 2);
    auto r5 = run_cli({"compute", "--index", "azi", "--family", "path:4", "--graph6", "-"});
    CHECK(r5.status == 2);
}

TEST_CASE("--help exits 0") {
    auto r = run_cli({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("compute") != std::string::npos);
    auto r2 = run_cli({"enumerate", "--help"});
    CHECK(r2.status == 0);
}

TEST_CASE("enumerate defaults to graph6 lines") {
    auto r = run_cli({"enumerate", "--n", "5", "--k", "2"});
    CHECK(r.status == 0);
    CHECK(r.out == "D`{\n");
    auto rt = run_cli({"enumerate", "--n", "4", "--k", "0"});
    CHECK(rt.out == "Ck\nCs\n");
}

TEST_CASE("enumerate honors --max-results") {
    auto r = run_cli({"enumerate", "--n", "9", "--k", "0", "--max-results", "3"});
    CHECK(r.status == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == 3);
}

TEST_CASE("enumerate output feeds back into compute (graph6 round trip)") {
    auto listed = run_cli({"enumerate", "--n", "6", "--k", "1"});
    REQUIRE(listed.status == 0);
    auto computed = run_cli({"compute", "--index", "azi", "--graph6", "-"}, listed.out);
    CHECK(computed.status == 0);
    // Two output lines per input graph.
    auto graphs = graph6_decode_lines(listed.out);
    std::istringstream lines(computed.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == static_cast<int>(2 * graphs.size()));
}

TEST_CASE("family subcommand emits the constructed graph") {
    auto r = run_cli({"family", "--family", "g0:5,2"});
    CHECK(r.status == 0);
    Graph g = graph6_decode(r.out.substr(0, r.out.size() - 1));
    CHECK(isomorphic(g, construct(parse_family_spec("g0:5,2"))));
    auto rj = run_cli({"family", "--family", "path:3", "--format", "json"});
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["n"] == 3);
    CHECK(j["m"] == 2);
    CHECK(j["spec"] == "path:3");
    auto bad = run_cli({"family", "--family", "path:3", "--format", "table"});
    CHECK(bad.status == 2);
}

TEST_CASE("extremal defaults to a JSON report") {
    auto r = run_cli({"extremal", "--n", "4", "--k", "1", "--direction", "min"});
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value_exact"] == "219/8");
    CHECK(j["class_size"] == 2);
    CHECK(j["attaining"].size() == 1);
}

TEST_CASE("verify subcommands render tables and exit by outcome") {
    auto r = run_cli({"verify", "theorem1", "--nmax", "5"});
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    auto rf = run_cli({"verify", "fmonotone", "--nmax", "100"});
    CHECK(rf.status == 0);
    auto rm = run_cli({"verify", "maxclaims", "--n", "7"});
    CHECK(rm.status == 0);
    auto rt2 = run_cli({"verify", "theorem2", "--n", "10"});
    CHECK(rt2.status == 0);
    // Out-of-hypothesis n is a domain error, not a violation.
    auto bad = run_cli({"verify", "theorem2", "--n", "9"});
    CHECK(bad.status == 2);
}

TEST_CASE("conjecture subcommand emits a verdict") {
    auto r = run_cli({"conjecture", "--n", "5"});
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "Agree");
    CHECK(j["n"] == 5);
}

TEST_CASE("climb is deterministic given the seed") {
    std::vector<std::string> argv = {"climb", "--family", "path:10",
                                     "--max-steps", "200", "--seed", "1"};
    auto a = run_cli(argv);
    auto b = run_cli(argv);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["best_azi_exact"] == "4825/64");
}

TEST_CASE("--out writes the report to a file instead of stdout") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "azi_cli_out_test.json";
    std::error_code ec;
    fs::remove(tmp, ec);
    auto r = run_cli({"extremal", "--n", "5", "--k", "2", "--out", tmp.string()});
    REQUIRE(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(tmp);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    auto j = nlohmann::json::parse(content.str());
    CHECK(j["value_exact"] == "48");
    fs::remove(tmp, ec);
}

TEST_CASE("graph6 format is rejected for tabular reports") {
    auto r = run_cli({"conjecture", "--n", "4", "--format", "graph6"});
    CHECK(r.status == 2);
}
