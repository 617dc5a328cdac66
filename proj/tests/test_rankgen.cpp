#include <gtest/gtest.h>

#include "kyoung/ideal.hpp"
#include "kyoung/rankgen.hpp"
#include "oracles.hpp"

using namespace kyoung;

namespace {

QPoly poly(std::initializer_list<std::int64_t> c) {
    std::vector<BigInt> v;
    for (auto x : c) v.emplace_back(x);
    return QPoly(std::move(v));
}

// Rank counts of box partitions filtered by short-row count.
std::vector<std::int64_t> box_counts(int m, int n, auto keep) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(m * n) + 1, 0);
    for (const auto& p : oracle::box(m, n)) {
        int s = 0;
        for (int x : p) s += x < m;
        if (keep(s)) ++c[static_cast<std::size_t>(oracle::degree(p))];
    }
    return c;
}

std::vector<std::int64_t> padded(const QPoly& p, std::size_t len) {
    std::vector<std::int64_t> out(len, 0);
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) out[i] = p.coefficients()[i].convert_to<std::int64_t>();
    return out;
}

}  // namespace

TEST(Arithmetic, Primes) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(13));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(12));
    EXPECT_EQ(prime_divisors(12), (std::vector<std::int64_t>{2, 3}));
    EXPECT_EQ(nontrivial_divisors(12), (std::vector<std::int64_t>{2, 3, 4, 6, 12}));
    EXPECT_TRUE(is_minus_one_mod(8, 3));
    EXPECT_FALSE(sieve_hypothesis(6, 8, 6));
    EXPECT_TRUE(sieve_hypothesis(6, 8, 4));
    EXPECT_FALSE(sieve_hypothesis(6, 7, 4));
}

TEST(RankGen, Examples) {
    EXPECT_EQ(rank_gen_Lk(3, 3, 3), QPoly::geometric(1, 10));
    EXPECT_EQ(rank_gen_Lk(3, 3, 4), poly({1, 1, 2, 2, 2, 2, 2, 2, 1, 1}));
    EXPECT_EQ(rank_gen_gamma(3, 3, 4), poly({0, 0, 1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(rank_gen_gamma(3, 3, 5), poly({0, 0, 0, 1, 1, 1, 1}));
    EXPECT_EQ(count_Lk(3, 3, 5), 20);
    EXPECT_EQ(count_Lk(3, 3, 4), 16);
    EXPECT_EQ(count_Lk(3, 3, 3), 10);
    for (int k = 1; k <= 8; ++k) {
        for (int m = 1; m <= k; ++m) EXPECT_EQ(rank_gen_Lk(m, k - m + 1, k), gaussian(k + 1, m));
    }
    EXPECT_THROW(rank_gen_Lk(4, 3, 3), domain_error);
    EXPECT_THROW(rank_gen_Lk(2, 1, 4), domain_error);
    EXPECT_THROW(rank_gen_gamma(3, 3, 3), domain_error);
}

TEST(RankGen, MatchesBoxFilter) {
    for (int m = 1; m <= 4; ++m) {
        for (int k = m; k <= 7; ++k) {
            for (int n = k - m + 1; n <= 6; ++n) {
                const auto all = box_counts(m, n, [&](int s) { return s <= k - m + 1; });
                EXPECT_EQ(padded(rank_gen_Lk(m, n, k), all.size()), all) << m << " " << n << " " << k;
                EXPECT_EQ(rank_gen_Lk(m, n, k).at_one(), count_Lk(m, n, k));
                if (k > m) {
                    const auto g = box_counts(m, n, [&](int s) { return s == k - m + 1; });
                    const QPoly gg = rank_gen_gamma(m, n, k);
                    EXPECT_EQ(padded(gg, g.size()), g);
                    EXPECT_TRUE(is_symmetric(gg, std::int64_t{m} * n));
                }
            }
        }
    }
}

TEST(ConjectureSum, Forms) {
    EXPECT_EQ(conjecture_sum_limit(3, 4, 3), poly({1, 1, 1}));
    EXPECT_THROW(conjecture_sum_limit(4, 4, 3), domain_error);
    EXPECT_THROW(conjecture_sum(3, 3, 3, 5), domain_error);
    EXPECT_THROW(conjecture_sum(3, 8, 3, 5), domain_error);
    for (int m = 2; m <= 4; ++m) {
        for (int k = m + 1; k <= 7; ++k) {
            for (int n = k - m + 1; n <= 6; ++n) {
                EXPECT_EQ(conjecture_sum(m, k, m, n).at_one(), count_Lk(m, n, k) - (m * n + 1));
            }
        }
    }
}

TEST(Cyclotomic, Examples) {
    EXPECT_TRUE(cyclotomic_check(2, 4, 2, 2));
    EXPECT_TRUE(cyclotomic_check(3, 6, 3, 3));
    EXPECT_THROW(cyclotomic_check(2, 4, 2, 1), domain_error);
    EXPECT_THROW(cyclotomic_check(2, 4, 6, 4), domain_error);
    // Hypothesis violated (b = 5 ≡ -1 mod 3): the root-of-unity sum is not zero.
    EXPECT_FALSE(cyclotomic_check(3, 5, 3, 3));
}
