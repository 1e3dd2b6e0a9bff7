// Copyright 2026 The onesided Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "onesided/cli.hpp"

namespace {

using onesided::json_io::json;

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = onesided::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(ONESIDED_SAMPLES_DIR) + "/" + name; }

TEST(Cli, ClassifyJson) {
    const Result r = run({"classify", "8", "3", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("command"), "classify");
    EXPECT_EQ(j.at("schema_version"), "1");
    EXPECT_EQ(j.at("payload").at("verdict"), "TwoMinimal");
    EXPECT_EQ(j.at("payload").at("genera"), json::array({3, 3, 5}));
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, JsonFlagPosition) {
    EXPECT_EQ(run({"--json", "classify", "8", "3"}).out, run({"classify", "8", "3", "--json"}).out);
}

TEST(Cli, NegativeCoordinates) {
    const Result r = run({"classify", "-8", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("TwoMinimal"), std::string::npos);
    EXPECT_NE(r.out.find("K01, K4m1"), std::string::npos);
}

TEST(Cli, GenusOfSurface) {
    EXPECT_EQ(run({"genus", "8", "3", "--surface", "4,-1"}).out, "5\n");
    EXPECT_EQ(run({"genus", "8", "3", "--surface", "0,1"}).out, "3\n");
    EXPECT_EQ(run({"genus", "8", "3", "--surface", "K41"}).out, "3\n");
    const Result bad = run({"genus", "8", "3", "--surface", "1,1"});
    EXPECT_EQ(bad.code, 2);
    const Result j = run({"--json", "genus", "8", "3", "--surface", "4,-1"});
    EXPECT_EQ(json::parse(j.out).at("payload").at("genus"), 5);
}

TEST(Cli, DomainErrorsExitOne) {
    Result r = run({"classify", "6", "3"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.err.rfind("CONSTRAINT_GCD: ", 0), 0U) << r.err;
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
    EXPECT_EQ(run({"classify", "7", "3"}).err.rfind("ODD_FIRST_COORDINATE", 0), 0U);
    EXPECT_EQ(run({"classify", "4", "1"}).err.rfind("CONSTRAINT_P_GT_2", 0), 0U);
    EXPECT_EQ(run({"classify", "10", "7"}).err.rfind("CONSTRAINT_P_GT_Q", 0), 0U);
    EXPECT_EQ(run({"enumerate", "--max", "4"}).code, 1);
    EXPECT_EQ(run({"sweep", "verify", "/nonexistent/trace.json"}).err.rfind("IO_ERROR", 0), 0U);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"classify", "8"}).code, 2);
    EXPECT_EQ(run({"classify", "eight", "3"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"enumerate"}).code, 2);
    EXPECT_EQ(run({"sweep"}).code, 2);
    EXPECT_EQ(run({"sweep", "verify", sample("legal_eight_three.json"), "--generator", "bogus"}).code, 2);
    EXPECT_EQ(run({"classify", "8", "3", "--relaxed"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Basis) {
    const Result r = run({"--json", "basis", "8", "3"});
    ASSERT_EQ(r.code, 0);
    const json p = json::parse(r.out).at("payload");
    EXPECT_EQ(p.at("matrix"), json::parse("[[3,-8],[-1,3]]"));
    EXPECT_EQ(p.at("filling_image"), json::array({0, 1}));
    EXPECT_EQ(p.at("images").at(2).at("torus"), json::array({-20, 7}));
    EXPECT_EQ(run({"basis", "2", "1"}).code, 1);
    const Result relaxed = run({"--json", "basis", "2", "1", "--relaxed"});
    ASSERT_EQ(relaxed.code, 0) << relaxed.err;
    EXPECT_EQ(json::parse(relaxed.out).at("payload").at("matrix"), json::parse("[[1,-2],[0,1]]"));
    EXPECT_EQ(run({"basis", "3", "1", "--relaxed"}).code, 1);
}

TEST(Cli, EnumerateTsv) {
    const Result r = run({"enumerate", "--max", "12", "--tsv"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    EXPECT_EQ(header, "two_p\tq\tg_K01\tg_K41\tg_K4m1\tverdict\tminimal_classes");
    EXPECT_EQ(first, "-6\t1\t4\t6\t2\tUniqueMinimal\tK4m1");
    EXPECT_NE(r.out.find("8\t3\t3\t3\t5\tTwoMinimal\tK01,K41\n"), std::string::npos);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 15);
}

TEST(Cli, EnumerateDeterministic) {
    const Result a = run({"enumerate", "--max", "80", "--json"});
    const Result b = run({"enumerate", "--max", "80", "--json"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run({"enumerate", "--max", "80"}).out, run({"enumerate", "--max", "80"}).out);
}

// Parsing and re-serializing every JSON output is byte-identical.
TEST(Cli, JsonRoundTripIsByteIdentical) {
    const std::vector<std::vector<std::string>> cmds = {
        {"--json", "classify", "8", "3"},
        {"--json", "classify", "-22", "7"},
        {"--json", "genus", "10", "3", "--surface", "4,1"},
        {"--json", "basis", "8", "3"},
        {"--json", "basis", "2", "1", "--relaxed"},
        {"--json", "enumerate", "--max", "20"},
        {"--json", "sweep", "verify", sample("legal_eight_three.json")},
        {"--json", "sweep", "verify", sample("klein_ten_three.json")},
    };
    for (const auto& c : cmds) {
        const Result r = run(c);
        ASSERT_EQ(r.code, 0) << c[1] << ": " << r.err;
        EXPECT_EQ(json::parse(r.out).dump(2) + "\n", r.out) << c[1];
        // No floats anywhere.
        EXPECT_EQ(r.out.find('.'), std::string::npos) << c[1];
    }
}

TEST(Cli, SweepVerify) {
    Result ok = run({"sweep", "verify", sample("legal_eight_three.json")});
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("verdict: LabelConstant"), std::string::npos);

    Result bad = run({"--json", "sweep", "verify", sample("illegal_saddle5.json")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(bad.err.rfind("ILLEGAL_MOVE: step 1", 0), 0U) << bad.err;
    const json j = json::parse(bad.out);
    EXPECT_EQ(j.at("payload").at("verdict"), "IllegalMove");
    EXPECT_EQ(j.at("payload").at("failed_step"), 1);

    Result unknown = run({"sweep", "verify", sample("unknown_kind.json")});
    EXPECT_EQ(unknown.code, 1);
    EXPECT_EQ(unknown.err.rfind("UNKNOWN_MOVE_KIND: move 1", 0), 0U);

    Result descent = run({"sweep", "verify", sample("legal_eight_three.json"), "--generator", "descent"});
    EXPECT_EQ(descent.code, 1);
    EXPECT_EQ(descent.err.rfind("GENERATOR_REJECTED", 0), 0U);
}

TEST(Cli, ColorOnlyOnTerminalWithoutNoColor) {
    EXPECT_FALSE(onesided::cli::terminal_style(false).color);
    ::unsetenv("NO_COLOR");
    EXPECT_TRUE(onesided::cli::terminal_style(true).color);
    ::setenv("NO_COLOR", "1", 1);
    EXPECT_FALSE(onesided::cli::terminal_style(true).color);
    ::unsetenv("NO_COLOR");
    std::ostringstream out, err;
    onesided::cli::run({"classify", "8", "3"}, out, err, onesided::cli::Style{true});
    EXPECT_NE(out.str().find("\033["), std::string::npos);
    EXPECT_EQ(run({"classify", "8", "3"}).out.find("\033["), std::string::npos);
}

// The installed binary: exit statuses survive the process boundary.
TEST(Cli, BinaryExitStatuses) {
    auto status = [](const std::string& args) {
        const std::string cmd = std::string(ONESIDED_CLI_PATH) + " " + args + " >/dev/null 2>&1";
        const int raw = std::system(cmd.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    EXPECT_EQ(status("classify 8 3"), 0);
    EXPECT_EQ(status("classify 6 3"), 1);
    EXPECT_EQ(status("classify"), 2);
    EXPECT_EQ(status("genus 8 3 --surface 4,-1"), 0);
}

} // namespace
