#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "webkup/io.hpp"

using namespace webkup;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    args.insert(args.begin(), "--no-cache");
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(WEBKUP_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, EnumerateArc) {
    CliRun r = run({"enumerate", "+-"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = Json::parse(r.out);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["key"], "1m");
}

TEST(Cli, SignStringsStartingWithMinus) {
    CliRun r = run({"center-dim", "-+"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "3\n");
}

TEST(Cli, EvalClosedWebs) {
    EXPECT_EQ(run({"eval", "--closed", data("circle.json")}).out, "q^2 + 1 + q^-2\n");
    CliRun t = run({"eval", "--closed", data("theta.json"), "--method", "both"});
    EXPECT_EQ(t.code, 0);
    EXPECT_EQ(t.out, "q^3 + 2*q + 2*q^-1 + q^-3\n");
    EXPECT_EQ(run({"--q1", "eval", "--closed", data("theta.json")}).out, "6\n");
    EXPECT_EQ(run({"eval", "--closed", data("arc.json")}).code, 2);
}

TEST(Cli, CenterDim) {
    EXPECT_EQ(run({"center-dim", "+++"}).out, "6\n");
    EXPECT_EQ(run({"center-dim", "+-"}).out, "3\n");
}

TEST(Cli, ExpandArc) {
    CliRun r = run({"expand", data("arc.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(Json::parse(r.out).dump(), R"({"1m":[[0,1]],"00":[[-1,1]],"m1":[[-2,1]]})");
}

TEST(Cli, BlocksAndTableau) {
    Json b = Json::parse(run({"blocks", "+++"}).out);
    EXPECT_EQ(b["blocks"].size(), 6u);
    EXPECT_EQ(b["sum_of_squares"], 6);
    Json t = Json::parse(run({"tableau", "+++", "10m"}).out);
    EXPECT_EQ(t["rows"].dump(), "[[1,2,3]]");
}

TEST(Cli, InverseGrowthTripod) {
    Json w = Json::parse(run({"inverse-growth", "+++", "10m"}).out);
    ASSERT_EQ(w.size(), 3u);
    EXPECT_EQ(w[1]["index"], 2);
    for (const Json& g : w) EXPECT_EQ(g["sign"], "-");
}

TEST(Cli, DualcanAndHowe) {
    Json d = Json::parse(run({"dualcan", "+-"}).out);
    EXPECT_TRUE(d.contains("dual_canonical"));
    EXPECT_TRUE(d.contains("d_matrix"));
    CliRun h = run({"howe-verify", "--k", "1"});
    EXPECT_EQ(h.code, 0) << h.out;
}

TEST(Cli, RenderAndSearch) {
    CliRun r = run({"render", "--sign", "+++", "--key", "10m", "--canonical"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("class=\"flow\""), std::string::npos);
    EXPECT_EQ(r.out, run({"render", "--sign", "+++", "--key", "10m", "--canonical"}).out);
    Json s = Json::parse(run({"search-counterexample", "--max-len", "4"}).out);
    EXPECT_EQ(s["complete"], true);
    EXPECT_TRUE(s["found"].empty());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"center-dim"}).code, 2);
    EXPECT_EQ(run({"center-dim", "+a"}).code, 2);
    EXPECT_EQ(run({"eval", "--closed", "/nonexistent.json"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SelftestSubset) {
    CliRun r = run({"selftest", "--only", "1", "4"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.rfind("PASS [1]", 0), 0u);
}
