#include "inner_rates/cli.hpp"
#include "inner_rates/document.hpp"
#include "inner_rates/invariants.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace inner_rates;
using inner_rates::test_support::fixture_path;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("inner_rates_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::vector<std::string> commands{"check", "multiplicities", "rates", "laplacian", "le-greuel",
                                        "enumerate-polar", "export-dot"};

}  // namespace

TEST(Cli, RatesE8) {
    const CliRun r = run({"rates", fixture_path("e8")});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "v0 1  v1 4/3  v2 3/2  v3 8/5  v4 5/3  v5 7/4  v6 2  v7 2");
    EXPECT_NE(r.out.find("admissible: yes"), std::string::npos);
}

TEST(Cli, LaplacianJsonE8) {
    const CliRun r = run({"laplacian", fixture_path("e8"), "--json"});
    EXPECT_EQ(r.code, exit_ok);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["laplacian"].dump(), R"({"v0":2,"v4":6,"v6":-2,"v7":-6})");
    EXPECT_EQ(j["K"].dump(), R"({"v0":-2,"v4":6,"v6":-2,"v7":-3})");
    EXPECT_TRUE(j["holds"].get<bool>());
    EXPECT_EQ(run({"--json", "laplacian", fixture_path("e8")}).out, r.out);
}

TEST(Cli, RatesJsonUsesExactRationals) {
    const Json j = Json::parse(run({"--json", "rates", fixture_path("e8")}).out);
    EXPECT_EQ(j["rates"]["v1"].dump(), R"({"num":4,"den":3})");
    EXPECT_EQ(rational_from_json(j["rates"]["v5"]), test_support::r(7, 4));
}

TEST(Cli, EnumerateBrianconSpeder) {
    const CliRun r = run({"enumerate-polar", fixture_path("bs_t0")});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_NE(r.out.find("configs: 2\n"), std::string::npos);
    EXPECT_NE(r.out.find("config 1: p=(28,1,1,0) q=(2,2,4/3,1)"), std::string::npos);
    EXPECT_NE(r.out.find("config 2: p=(28,4,0,0) q=(2,3,4/3,1)"), std::string::npos);
    EXPECT_EQ(run({"enumerate-polar", fixture_path("bs_t0"), "--threads", "4"}).out, r.out);
    const Json j = Json::parse(run({"enumerate-polar", fixture_path("bs_tneq0"), "--json"}).out);
    ASSERT_EQ(j["configs"].size(), 1u);
    EXPECT_EQ(j["configs"][0]["p"].dump(), R"({"v1":30,"v2":0,"v3":0,"v4":0})");
}

TEST(Cli, LeGreuel) {
    const CliRun r = run({"le-greuel", fixture_path("bs_tneq0")});
    EXPECT_NE(r.out.find("m(X): 5\n"), std::string::npos);
    EXPECT_NE(r.out.find("m(Pi): 30\n"), std::string::npos);
    EXPECT_NE(r.out.find("chi(F): -25\n"), std::string::npos);
    EXPECT_NE(r.out.find("balance: holds\n"), std::string::npos);
}

TEST(Cli, Contact) {
    const CliRun r = run({"contact", fixture_path("e8"), "v6", "v7"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "exponent: 5/3\npath: v6 v5 v4 v7\npaths: 1\n");
    EXPECT_EQ(run({"contact", fixture_path("e8"), "v6", "nope"}).code, exit_invalid);
}

TEST(Cli, BlowupEmitsAnnotatedDocument) {
    const CliRun r = run({"blowup", fixture_path("e8"), "--edge", "v4", "v7"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    const GraphDocument doc = parse_document(r.out);
    ASSERT_EQ(doc.vertices.size(), 9u);
    EXPECT_EQ(doc.vertices.back().data.id, "w1");
    EXPECT_EQ(*doc.vertices.back().m, 9);
    EXPECT_EQ(*doc.vertices.back().q, test_support::r(16, 9));
    const InvariantBundle b = solve_inner_rates(doc.to_graph());
    for (std::size_t v = 0; v < doc.vertices.size(); ++v) {
        EXPECT_EQ(b.m[v], *doc.vertices[v].m);
        EXPECT_EQ(b.q[v], *doc.vertices[v].q);
    }

    const CliRun smooth = run({"blowup", fixture_path("e8"), "--vertex", "v0"});
    EXPECT_NE(smooth.out.find("vertex w1 selfint=-1 m=2 q=3/2\n"), std::string::npos);
    const CliRun moved = run({"blowup", fixture_path("e8"), "--vertex", "v0", "--transfer-l", "1"});
    EXPECT_NE(moved.out.find("vertex w1 selfint=-1 L=1 m=3 q=2/3\n"), std::string::npos);
    const Json j = Json::parse(run({"blowup", fixture_path("e8"), "--vertex", "v0", "--json"}).out);
    EXPECT_EQ(serialize(document_from_json(j)), smooth.out);
}

TEST(Cli, BlowupErrors) {
    EXPECT_EQ(run({"blowup", fixture_path("e8")}).code, exit_parse);
    EXPECT_EQ(run({"blowup", fixture_path("e8"), "--edge", "v0", "v7"}).code, exit_invalid);
    EXPECT_EQ(run({"blowup", fixture_path("e8"), "--vertex", "v0", "--transfer-l", "2"}).code, exit_invalid);
    EXPECT_EQ(run({"blowup", fixture_path("e8"), "--edge", "v0", "v1", "--transfer-l", "1"}).code, exit_parse);
    EXPECT_EQ(run({"blowup", fixture_path("e8"), "--edge", "v0", "v1", "--vertex", "v0"}).code, exit_parse);
}

TEST(Cli, ExportDot) {
    const CliRun r = run({"export-dot", fixture_path("e8")});
    EXPECT_NE(r.out.find(R"("v4" [label="v4\nm=6,q=5/3"];)"), std::string::npos);
    EXPECT_NE(r.out.find(R"("v4" -- "v7" [label="len=1/18"];)"), std::string::npos);
    const CliRun lcm = run({"export-dot", fixture_path("e8"), "--metric", "lcm"});
    EXPECT_NE(lcm.out.find(R"("v4" -- "v7" [label="len=1/6"];)"), std::string::npos);
    EXPECT_EQ(run({"export-dot", fixture_path("e8"), "--metric", "euclid"}).code, exit_parse);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, exit_parse);
    EXPECT_EQ(run({"frobnicate"}).code, exit_parse);
    EXPECT_EQ(run({"rates"}).code, exit_parse);
    EXPECT_EQ(run({"--help"}).code, exit_ok);
    EXPECT_EQ(run({"rates", "/nonexistent.graph"}).code, exit_parse);

    const std::string loop = temp_file("loop.graph", "graph g\nvertex a selfint=-2 L=1\nedge a a\n");
    const CliRun parse = run({"rates", loop});
    EXPECT_EQ(parse.code, exit_parse);
    EXPECT_NE(parse.err.find(loop + ":3:8: loop edge"), std::string::npos) << parse.err;

    const std::string indefinite =
        temp_file("indef.graph", "graph g\nvertex a selfint=-1 L=1\nvertex b selfint=-1\nedge a b count=2\n");
    EXPECT_EQ(run({"check", indefinite}).code, exit_invalid);
    EXPECT_NE(run({"check", indefinite}).out.find("negative-definite: no"), std::string::npos);
    for (const auto& command : {"multiplicities", "rates", "laplacian", "le-greuel", "export-dot"})
        EXPECT_EQ(run({command, indefinite}).code, exit_invalid) << command;

    const std::string half = temp_file("half.graph", "graph g\nvertex a selfint=-2 L=1\n");
    EXPECT_EQ(run({"multiplicities", half}).code, exit_invalid);
}

TEST(Cli, NonAdmissibleRatesStillPrint) {
    const std::string moved = temp_file("moved.graph",
                                        "graph g\nvertex v0 selfint=-3 L=1 P=1\nvertex v2 selfint=-1\n"
                                        "vertex v0p selfint=-3 L=1 P=1\nedge v0 v2\nedge v2 v0p\n");
    const CliRun r = run({"rates", moved});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_NE(r.out.find("v0 1  v2 1  v0p 1\n"), std::string::npos);
    EXPECT_NE(r.out.find("warning: q(v2) = 1 away from the L-nodes\n"), std::string::npos);
    EXPECT_NE(r.out.find("admissible: no"), std::string::npos);
}

TEST(Cli, Deterministic) {
    for (const auto& name : test_support::fixture_names()) {
        for (const auto& command : commands) {
            for (bool json : {false, true}) {
                std::vector<std::string> args{command, fixture_path(name)};
                if (json) args.push_back("--json");
                const CliRun first = run(args);
                const CliRun second = run(args);
                EXPECT_EQ(first.code, exit_ok) << command << " " << name << " " << first.err;
                EXPECT_EQ(first.out, second.out) << command << " " << name;
                if (json) EXPECT_NO_THROW(Json::parse(first.out)) << command << " " << name;
            }
        }
    }
}

TEST(Cli, GoldenA2) {
    for (const std::string name : {"a2_min", "a2_nash"}) {
        for (const std::string command : {"multiplicities", "rates", "laplacian", "le-greuel", "enumerate-polar"}) {
            const std::string golden = std::string(GOLDEN_DIR) + "/" + name + "." + command + ".txt";
            ASSERT_TRUE(std::filesystem::exists(golden)) << golden;
            EXPECT_EQ(run({command, fixture_path(name)}).out, slurp(golden)) << name << " " << command;
        }
    }
}
