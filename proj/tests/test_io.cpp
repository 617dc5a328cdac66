#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "kyoung/io.hpp"
#include "kyoung/rankgen.hpp"

using namespace kyoung;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("kyoung_test_" + std::to_string(::getpid()) + "_" + name);
}

int cli(const std::string& args, const std::filesystem::path& out) {
    const std::string cmd = std::string(KYOUNG_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST(Json, PartitionsAndShapes) {
    EXPECT_EQ(to_json(Partition({4, 2})).dump(), "[4,2]");
    EXPECT_EQ(to_json(Partition()).dump(), "[]");
    EXPECT_EQ(to_json(SkewShape(Partition({6, 2, 1, 1}), Partition({2}))).dump(), R"({"outer":[6,2,1,1],"inner":[2]})");
    EXPECT_EQ(partition_from_json(json::parse("[3,1,1]")), Partition({3, 1, 1}));
    EXPECT_THROW(partition_from_json(json::parse("[1,3]")), domain_error);
    EXPECT_THROW(partition_from_json(json::parse(R"("x")")), domain_error);
    const SkewShape s(Partition({5, 5, 4, 1}), Partition({4, 2}));
    EXPECT_EQ(skew_from_json(to_json(s)), s);
    EXPECT_THROW(skew_from_json(json::parse("[1]")), domain_error);
}

TEST(Json, Polynomials) {
    EXPECT_EQ(to_json(rank_gen_Lk(3, 3, 4)).dump(), "[1,1,2,2,2,2,2,2,1,1]");
    QPoly big = QPoly::constant(1);
    for (int i = 0; i < 70; ++i) big = big * QPoly(std::vector<BigInt>{1, 1});
    const json j = to_json(big);
    EXPECT_TRUE(j[35].is_string());
    EXPECT_EQ(j[35].get<std::string>(), binomial(70, 35).str());
    EXPECT_TRUE(j[0].is_number_integer());
}

TEST(Parse, Partitions) {
    EXPECT_EQ(parse_partition("4,3,2,2,1,1"), Partition({4, 3, 2, 2, 1, 1}));
    EXPECT_EQ(parse_partition(" [4, 2] "), Partition({4, 2}));
    EXPECT_EQ(parse_partition(""), Partition());
    EXPECT_THROW(parse_partition("4,,2"), domain_error);
    EXPECT_THROW(parse_partition("a"), domain_error);
    EXPECT_THROW(parse_partition("2,3"), domain_error);
}

TEST(Dot, ChainHasTenRankClusters) {
    const std::string dot = to_dot(build_ideal(Partition({3, 3, 3}), 3));
    EXPECT_EQ(dot.rfind("digraph kyoung {", 0), 0u);
    std::size_t clusters = 0, nodes = 0, edges = 0;
    std::istringstream in(dot);
    for (std::string line; std::getline(in, line);) {
        clusters += line.find("subgraph rank_") != std::string::npos;
        nodes += line.find("[label=") != std::string::npos;
        edges += line.find("->") != std::string::npos;
    }
    EXPECT_EQ(clusters, 10u);
    EXPECT_EQ(nodes, 10u);
    EXPECT_EQ(edges, 9u);
    EXPECT_EQ(dot, to_dot(build_ideal(Partition({3, 3, 3}), 3)));
}

TEST(Hasse, JsonLayout) {
    const json j = to_json(build_ideal(Partition({2, 2}), 2));
    EXPECT_EQ(j["k"], 2);
    EXPECT_EQ(j["ranks"].size(), 5u);
    for (const auto& e : j["edges"]) EXPECT_LT(e[0].get<int>(), e[1].get<int>());
}

TEST(Csv, RankVector) {
    const std::string csv = to_csv(rank_vector(enumerate(IdealSpec(3, 3, 4)), 9));
    std::istringstream in(csv);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    ASSERT_EQ(lines.size(), 11u);
    EXPECT_EQ(lines[0], "i,count");
    EXPECT_EQ(lines[3], "2,2");
    EXPECT_EQ(to_csv(QPoly::geometric(1, 2)), "i,count\n0,1\n1,1\n");
}

TEST(Files, WriteAndFailure) {
    const auto p = scratch("w.txt");
    write_text_file(p.string(), "abc\n");
    EXPECT_EQ(slurp(p), "abc\n");
    std::filesystem::remove(p);
    EXPECT_THROW(write_text_file("/nonexistent-dir/x/y.txt", "a"), std::runtime_error);
}

TEST(Cli, Subcommands) {
    const auto out = scratch("cli.txt");
    EXPECT_EQ(cli("kconj 4,3,2,2,1,1 --k 4", out), 0);
    EXPECT_EQ(slurp(out), "[3,2,2,1,1,1,1,1,1]\n");
    EXPECT_EQ(cli("kskew 4,3,2,2,1,1 --k 4", out), 0);
    EXPECT_EQ(slurp(out), "{\"outer\":[9,5,3,2,1,1],\"inner\":[5,2,1]}\n");
    EXPECT_EQ(cli("covers 4,2,1,1 --k 4 --dir up", out), 0);
    EXPECT_EQ(slurp(out), "[[4,2,1,1,1],[4,2,2,1]]\n");
    EXPECT_EQ(cli("rankgen --m 3 --n 3 --k 4", out), 0);
    EXPECT_EQ(slurp(out), "[1,1,2,2,2,2,2,2,1,1]\n");
    EXPECT_EQ(cli("ideal --m 3 --n 3 --k 4 --csv", out), 0);
    EXPECT_EQ(slurp(out).substr(0, 8), "i,count\n");
    std::filesystem::remove(out);
}

TEST(Cli, ExitCodes) {
    const auto out = scratch("codes.txt");
    EXPECT_EQ(cli("verify sieved --m 3 --a 3 --b 4", out), 0);
    EXPECT_EQ(json::parse(slurp(out))["pass"], 2);
    EXPECT_EQ(cli("verify conjecture-u --m 4", out), 2);
    EXPECT_EQ(cli("verify sieved --m 6 --a 6 --b 8", out), 2);
    EXPECT_EQ(cli("kconj 5,1 --k 4", out), 2);
    EXPECT_EQ(cli("covers 2,1 --k 3 --dir sideways", out), 2);
    EXPECT_EQ(cli("nosuch", out), 2);
    EXPECT_EQ(cli("", out), 2);
    EXPECT_EQ(cli("sweep --config /nonexistent.json", out), 2);
    std::filesystem::remove(out);
}

TEST(Cli, DeterministicReportsAndConfig) {
    const auto a = scratch("a.json");
    const auto b = scratch("b.json");
    const auto log = scratch("log.txt");
    EXPECT_EQ(cli("verify conjecture-gen --m 2..6 --b 1..12 --n 1..12 --out " + a.string(), log), 0);
    EXPECT_EQ(cli("verify conjecture-gen --m 2..6 --b 1..12 --n 1..12 --out " + b.string(), log), 0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_FALSE(slurp(a).empty());

    const auto cfg = scratch("cfg.json");
    {
        std::ofstream f(cfg);
        f << R"([{"check":"sieved","m":{"min":2,"max":6},"b":"1..10","out":")" << a.string()
          << R"("},{"check":"structure","m":2,"n":3,"k":3,"degree_max":5,"format":"csv","out":")" << b.string()
          << R"("}])";
    }
    EXPECT_EQ(cli("sweep --config " + cfg.string(), log), 0);
    EXPECT_EQ(json::parse(slurp(a))["check"], "sieved");
    EXPECT_EQ(slurp(b).substr(0, 6), "check,");
    for (const auto& p : {a, b, log, cfg}) std::filesystem::remove(p);
}
