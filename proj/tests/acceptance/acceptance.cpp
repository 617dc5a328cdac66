// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact; each criterion also has a wall-time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "kyoung/kyoung.hpp"

using namespace kyoung;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
    void absorb(const VerificationReport& r) {
        require(r.ok() && r.pass > 0, r.check + ": " + std::to_string(r.fail) + " failures of " +
                                          std::to_string(r.grid()));
    }
};

std::vector<Partition> bounded_upto(int k, int degree_max) {
    std::vector<Partition> out;
    for (int d = 0; d <= degree_max; ++d) {
        auto level = partitions_of(d, k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

StructureBounds ideal_grid() {
    StructureBounds b;
    b.m_max = 4;
    b.k_max = 7;
    b.n_max = 6;
    return b;
}

template <typename F>
void for_each_spec(F&& f) {
    for (int m = 1; m <= 4; ++m) {
        for (int k = m; k <= 7; ++k) {
            for (int n = k - m + 1; n <= 6; ++n) f(IdealSpec(m, n, k));
        }
    }
}

Outcome golden_kskew() {
    Outcome o;
    const Partition p{4, 3, 2, 2, 1, 1};
    const SkewShape s = k_skew(p, 4);
    o.require(s.outer() == Partition({9, 5, 3, 2, 1, 1}) && s.inner() == Partition({5, 2, 1}),
              "k_skew gave " + s.outer().to_string() + "/" + s.inner().to_string());
    const Partition c = k_conjugate(p, 4);
    o.require(c == Partition({3, 2, 2, 1, 1, 1, 1, 1, 1}), "k_conjugate gave " + c.to_string());
    return o;
}

Outcome golden_covers() {
    Outcome o;
    const Partition p{4, 2, 1, 1};
    o.require(covers(p, 4, Direction::up) == std::vector<Partition>{Partition({4, 2, 1, 1, 1}), Partition({4, 2, 2, 1})},
              "up-covers differ");
    o.require(covers(p, 4, Direction::down) == std::vector<Partition>{Partition({4, 1, 1, 1}), Partition({4, 2, 1})},
              "down-covers differ");
    return o;
}

Outcome involution() {
    Outcome o;
    std::size_t n = 0;
    for (int k = 1; k <= 6; ++k) {
        for (const auto& p : bounded_upto(k, 12)) {
            ++n;
            o.require(k_conjugate(k_conjugate(p, k), k) == p, p.to_string() + " k=" + std::to_string(k));
        }
    }
    o.detail = o.ok ? std::to_string(n) + " partitions" : o.detail;
    return o;
}

Outcome covering_oracle() {
    Outcome o;
    std::size_t n = 0;
    for (int k = 1; k <= 5; ++k) {
        for (const auto& p : bounded_upto(k, 10)) {
            for (auto dir : {Direction::up, Direction::down}) {
                ++n;
                o.require(covers(p, k, dir) == covers_oracle(p, k, dir), p.to_string() + " k=" + std::to_string(k));
            }
        }
    }
    o.detail = o.ok ? std::to_string(n) + " comparisons" : o.detail;
    return o;
}

Outcome rectangle_union() {
    Outcome o;
    std::size_t n = 0;
    for (int k = 1; k <= 5; ++k) {
        for (const auto& p : bounded_upto(k, 8)) {
            const Partition pc = k_conjugate(p, k);
            for (const auto& r : KRectangle::all(k)) {
                ++n;
                o.require(k_conjugate(union_of(p, r.shape()), k) == union_of(pc, conjugate(r.shape())),
                          p.to_string() + " rect " + r.shape().to_string());
            }
        }
    }
    o.detail = o.ok ? std::to_string(n) + " cases" : o.detail;
    return o;
}

Outcome rectangle_translation() {
    Outcome o;
    std::size_t n = 0;
    for (int k = 1; k <= 4; ++k) {
        for (const auto& p : bounded_upto(k, 6)) {
            for (const auto& r : KRectangle::all(k)) {
                ++n;
                o.require(check_rectangle_translation(p, r, k).translation_equal,
                          p.to_string() + " rect " + r.shape().to_string());
            }
        }
    }
    o.detail = o.ok ? std::to_string(n) + " cases" : o.detail;
    return o;
}

Outcome counts_and_ranks() {
    Outcome o;
    std::size_t n = 0;
    for_each_spec([&](const IdealSpec& s) {
        ++n;
        const auto members = enumerate(s);
        o.require(BigInt(members.size()) == count_Lk(s.m, s.n, s.k), "count " + s.to_string());
        const RankVector rv = rank_vector(members, s.top_rank());
        const QPoly closed = rank_gen_Lk(s.m, s.n, s.k);
        bool same = closed.degree() == s.top_rank();
        for (std::size_t i = 0; i < rv.coefficients.size(); ++i) same = same && closed.coeff(static_cast<std::int64_t>(i)) == rv.coefficients[i];
        o.require(same, "rank vector " + s.to_string());
    });
    o.require(enumerate(IdealSpec(3, 3, 3)).size() == 10, "spot (3,3,3)");
    o.require(enumerate(IdealSpec(3, 3, 4)).size() == 16, "spot (3,3,4)");
    o.require(enumerate(IdealSpec(3, 3, 5)).size() == 20, "spot (3,3,5)");
    o.detail = o.ok ? std::to_string(n) + " ideals" : o.detail;
    return o;
}

Outcome induced_subposet() {
    Outcome o;
    std::size_t n = 0;
    for_each_spec([&](const IdealSpec& s) {
        const auto members = enumerate(s);
        for (const auto& a : members) {
            for (const auto& b : members) {
                ++n;
                o.require(leq(a, b, s.k) == contains(a, b), s.to_string() + " " + a.to_string() + " " + b.to_string());
            }
        }
    });
    o.detail = o.ok ? std::to_string(n) + " pairs" : o.detail;
    return o;
}

Outcome lattice_and_duality() {
    Outcome o;
    const StructureBounds b = ideal_grid();
    o.absorb(check_meet_join(b));
    o.absorb(check_self_duality(b));
    for_each_spec([&](const IdealSpec& s) {
        o.require(rank_vector(enumerate(s), s.top_rank()).is_palindromic(), "palindrome " + s.to_string());
        if (s.k > s.m) {
            o.require(is_symmetric(rank_gen_gamma(s.m, s.n, s.k), s.top_rank()), "gamma symmetry " + s.to_string());
            o.require(rank_vector(gamma_set(s), s.top_rank()).is_palindromic(), "gamma palindrome " + s.to_string());
        }
    });
    return o;
}

Outcome decomposition() {
    Outcome o;
    for_each_spec([&](const IdealSpec& s) {
        QPoly sum = QPoly::geometric(1, static_cast<std::size_t>(s.top_rank()) + 1);
        for (int r = s.m + 1; r <= s.k; ++r) sum += rank_gen_gamma(s.m, s.n, r);
        o.require(sum == rank_gen_Lk(s.m, s.n, s.k), s.to_string());
    });
    return o;
}

Outcome sieved() {
    Outcome o;
    const auto binom = verify_sieved_binomial(IntSet{2, 3, 5, 7}, IntSet::range(1, 30));
    const auto grid = verify_sieved_grid(IntSet::range(2, 12), IntSet::range(1, 20));
    o.absorb(binom);
    o.absorb(grid);
    if (o.ok) {
        o.detail = std::to_string(binom.grid()) + " binomial cells, " + std::to_string(grid.grid()) +
                   " (a,b,m) checks, " + std::to_string(grid.skip) + " non-qualifying skipped";
    }
    return o;
}

Outcome conjectures() {
    Outcome o;
    const auto u = verify_conjecture_u(IntSet{2, 3, 5, 7}, IntSet::range(1, 25), IntSet::range(1, 30), 5);
    const auto g = verify_conjecture_gen(IntSet::range(2, 12), IntSet{}, IntSet::range(1, 20), IntSet::range(1, 25));
    o.absorb(u);
    o.absorb(g);
    for (const auto* r : {&u, &g}) {
        for (const auto& c : r->counterexamples) std::cout << "  counterexample " << r->check << ": " << c.dump() << "\n";
    }
    if (o.ok) {
        o.detail = std::to_string(u.grid()) + " u-cells, " + std::to_string(g.grid()) + " sum cells";
    }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "k-skew and k-conjugate golden example", 1, golden_kskew},
        {2, "covers golden example", 1, golden_covers},
        {3, "k-conjugation involution (k<=6, |lambda|<=12)", 30, involution},
        {4, "covers equal covers_oracle (k<=5, |lambda|<=10)", 60, covering_oracle},
        {5, "rectangle union theorem (k<=5, |lambda|<=8)", 30, rectangle_union},
        {6, "rectangle translation of covers (k<=4, |lambda|<=6)", 60, rectangle_translation},
        {7, "ideal counts and rank vectors (m<=4, k<=7, n<=6)", 30, counts_and_ranks},
        {8, "leq equals containment on ideal members", 120, induced_subposet},
        {9, "meet/join lattice laws, self-duality, palindromes", 60, lattice_and_duality},
        {10, "rank-generating function decomposition", 10, decomposition},
        {11, "sieved sums and cyclotomic checks", 60, sieved},
        {12, "unimodality conjecture sweeps", 300, conjectures},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.budget_s;
        const bool pass = o.ok && in_time;
        failures += !pass;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.budget_s);
        std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing << ")";
        if (!in_time) std::cout << " over time budget";
        if (!o.detail.empty()) std::cout << ": " << o.detail;
        std::cout << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failures == 0 ? 0 : 1;
}
