#include <gtest/gtest.h>

#include "kyoung/sweep.hpp"
#include "kyoung/verify.hpp"

using namespace kyoung;

TEST(IntSet, Parsing) {
    EXPECT_EQ(IntSet::parse("5").values(), (std::vector<std::int64_t>{5}));
    EXPECT_EQ(IntSet::parse("2..5").values(), (std::vector<std::int64_t>{2, 3, 4, 5}));
    EXPECT_EQ(IntSet::parse("7,2,3,3").values(), (std::vector<std::int64_t>{2, 3, 7}));
    EXPECT_TRUE(IntSet::parse("5..2").empty());
    EXPECT_THROW(IntSet::parse("x"), domain_error);
    EXPECT_THROW(IntSet::parse("1,,2"), domain_error);
    EXPECT_EQ(IntSet::from_json(json::parse(R"({"min":1,"max":3})")).values(), (std::vector<std::int64_t>{1, 2, 3}));
    EXPECT_EQ(IntSet::from_json(json(4)).values(), (std::vector<std::int64_t>{4}));
    EXPECT_EQ(IntSet::from_json(json::parse("[3,1]")).values(), (std::vector<std::int64_t>{1, 3}));
    EXPECT_THROW(IntSet::from_json(json::parse("{}")), domain_error);
}

TEST(Report, Schema) {
    VerificationReport r("demo", CheckKind::conjecture);
    r.record(true, json{});
    r.record(false, json{{"m", 3}});
    r.skip = 4;
    EXPECT_EQ(r.grid(), 2);
    EXPECT_FALSE(r.ok());
    const json j = r.to_json();
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"check", "kind", "grid", "pass", "fail", "skip", "counterexamples", "notes",
                                              "elapsed_ms"}));
    EXPECT_EQ(j["kind"], "conjecture");
    EXPECT_EQ(j["counterexamples"].size(), 1u);
    EXPECT_EQ(j["elapsed_ms"], 0);
}

TEST(ConjectureU, Examples) {
    std::vector<std::int64_t> ks;
    for (int k = 4; k <= 20; ++k) {
        if (k % 3 != 0 && k % 3 != 2) ks.push_back(k);
    }
    const auto r3 = verify_conjecture_u(IntSet{3}, IntSet(ks), IntSet::range(2, 25), 5);
    EXPECT_EQ(r3.fail, 0);
    EXPECT_GT(r3.pass, 0);
    EXPECT_EQ(r3.kind, CheckKind::conjecture);

    const auto r2 = verify_conjecture_u(IntSet{2}, IntSet::range(3, 25), IntSet::range(1, 30));
    EXPECT_EQ(r2.fail, 0);
    EXPECT_THROW(verify_conjecture_u(IntSet{4}, IntSet::range(5, 9), IntSet::range(1, 9)), domain_error);
}

TEST(ConjectureU, BoundaryHandling) {
    // k = 5 ≡ -1 (mod 3): n = 3 is the excluded boundary, n = 4 is evaluated.
    const auto r = verify_conjecture_u(IntSet{3}, IntSet{5}, IntSet{3, 4});
    EXPECT_EQ(r.pass, 1);
    EXPECT_EQ(r.skip, 1);
    // k = 4: boundary n = 2 is inside the domain of the first clause.
    const auto s = verify_conjecture_u(IntSet{3}, IntSet{4}, IntSet{1, 2});
    EXPECT_EQ(s.pass, 1);
    EXPECT_EQ(s.skip, 1);
    EXPECT_EQ(verify_conjecture_u(IntSet{3}, IntSet{6}, IntSet{5}).skip, 1);
}

TEST(ConjectureGen, Examples) {
    const auto r = verify_conjecture_gen(IntSet{4}, IntSet{}, IntSet::range(5, 12), IntSet::range(1, 16));
    EXPECT_EQ(r.fail, 0);
    EXPECT_GT(r.pass, 0);
    const auto skipped = verify_conjecture_gen(6, 6, 8, 10);
    EXPECT_EQ(skipped.skip, 1);
    EXPECT_EQ(skipped.grid(), 0);
    EXPECT_THROW(verify_conjecture_gen(3, 3, 3, 5), domain_error);
    EXPECT_THROW(verify_conjecture_gen(3, 3, 8, 5), domain_error);
}

TEST(ConjectureGen, SpecialisesToFirstClause) {
    for (int m : {2, 3, 5}) {
        for (int k = m + 1; k <= 14; ++k) {
            if (k % m == 0 || (k + 1) % m == 0) continue;
            for (int n = k - m + 1; n <= k + 3; ++n) {
                const auto r = verify_conjecture_gen(m, k - 1, k, n);
                EXPECT_EQ(r.pass, is_unimodal(rank_gen_gamma(m, n, k)) ? 1 : 0);
            }
        }
    }
}

TEST(Sieved, Examples) {
    const auto r = verify_sieved(3, 3, 4);
    EXPECT_EQ(r.fail, 0);
    EXPECT_EQ(r.pass, 2);
    EXPECT_EQ(verify_sieved(2, 2, 4).fail, 0);
    EXPECT_THROW(verify_sieved(6, 6, 8), domain_error);
    EXPECT_THROW(verify_sieved(3, 3, 3), domain_error);
    for (int m : {2, 3, 5, 7}) {
        for (int k = m + 1; k <= 20; ++k) {
            if (k % m == 0 || (k + 1) % m == 0) continue;
            EXPECT_EQ(verify_sieved(m, k - 1, k).fail, 0);
        }
    }
}

TEST(Sieved, Grids) {
    const auto g = verify_sieved_grid(IntSet::range(2, 8), IntSet::range(1, 14));
    EXPECT_EQ(g.fail, 0);
    EXPECT_GT(g.skip, 0);
    const auto b = verify_sieved_binomial(IntSet{2, 3, 5, 7}, IntSet::range(1, 30));
    EXPECT_EQ(b.fail, 0);
    EXPECT_THROW(verify_sieved_binomial(IntSet{4}, IntSet{9}), domain_error);
}

TEST(Structure, SmallBoundsAllPass) {
    StructureBounds b;
    b.m_max = 3;
    b.n_max = 4;
    b.k_max = 4;
    b.degree_max = 6;
    const auto reports = verify_structure(b);
    EXPECT_EQ(reports.size(), 19u);
    for (const auto& r : reports) {
        EXPECT_TRUE(r.ok()) << r.to_json().dump();
        EXPECT_GT(r.pass, 0) << r.check;
        EXPECT_EQ(r.kind, CheckKind::theorem);
    }
}

TEST(Sweep, ConfigAndDeterminism) {
    const auto c = SweepConfig::from_json(json::parse(R"({"check":"conjecture-gen","m":[3,4],"b":"5..9","n":{"min":1,"max":8}})"));
    const std::string a = render_reports(run_sweep(c), c.format);
    const std::string b = render_reports(run_sweep(c), c.format);
    EXPECT_EQ(a, b);
    EXPECT_THROW(SweepConfig::from_json(json::parse(R"({"check":"nope"})")), domain_error);
    EXPECT_THROW(SweepConfig::from_json(json::parse(R"({"check":"sieved","bogus":1})")), domain_error);
    EXPECT_THROW(SweepConfig::from_json(json::parse(R"({"check":"sieved","m":[]})")), domain_error);
    EXPECT_THROW(SweepConfig::from_json(json::parse(R"({"check":"sieved","format":"dot"})")), domain_error);

    SweepConfig csv;
    csv.check = "sieved-binomial";
    csv.format = ReportFormat::csv;
    const std::string text = render_reports(run_sweep(csv), csv.format);
    EXPECT_EQ(text.substr(0, text.find('\n')), "check,kind,grid,pass,fail,skip,elapsed_ms");
}
