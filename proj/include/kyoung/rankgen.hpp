#pragma once

// Closed-form rank-generating functions of L^k(m,n) and its Γ strata, the
// Γ sums behind the unimodality conjectures, and the root-of-unity check
// behind the sieved-sum identity.

#include <cstdint>
#include <string>
#include <vector>

#include "kyoung/qpoly.hpp"

namespace kyoung {

inline bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Divisors d > 1 of n, increasing.
inline std::vector<std::int64_t> nontrivial_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

/// x ≡ -1 (mod p)
inline bool is_minus_one_mod(std::int64_t x, std::int64_t p) noexcept { return ((x + 1) % p + p) % p == 0; }

/// Neither a nor b is ≡ -1 modulo any prime divisor of m.
inline bool sieve_hypothesis(std::int64_t a, std::int64_t b, std::int64_t m) {
    for (auto p : prime_divisors(m)) {
        if (is_minus_one_mod(a, p) || is_minus_one_mod(b, p)) return false;
    }
    return true;
}

/// Σ_λ q^|λ| over L^k(m,n):
/// [k+1 choose m]_q + q^(k+1) (1 + q^m + ... + q^(m(n-k+m-2))) [k choose m-1]_q.
inline QPoly rank_gen_Lk(std::int64_t m, std::int64_t n, std::int64_t k) {
    if (m < 1 || m > k) throw domain_error("rank_gen_Lk: need 1 <= m <= k");
    if (n < k - m + 1) throw domain_error("rank_gen_Lk: need n >= k-m+1");
    QPoly out = gaussian(k + 1, m);
    const QPoly tail = QPoly::geometric(static_cast<std::size_t>(m), static_cast<std::size_t>(n - k + m - 1)) *
                       gaussian(k, m - 1);
    out.add_shifted(tail, static_cast<std::size_t>(k + 1));
    return out;
}

/// Σ_λ q^|λ| over Γ^k(m,n):
/// q^(k-m+1) (1 + q^m + ... + q^(m(n-k+m-1))) [k-1 choose m-2]_q.
inline QPoly rank_gen_gamma(std::int64_t m, std::int64_t n, std::int64_t k) {
    if (m < 1 || k <= m) throw domain_error("rank_gen_gamma: need 1 <= m < k");
    if (n < k - m + 1) throw domain_error("rank_gen_gamma: need n >= k-m+1");
    const QPoly body = QPoly::geometric(static_cast<std::size_t>(m), static_cast<std::size_t>(n - k + m)) *
                       gaussian(k - 1, m - 2);
    return body.shifted(static_cast<std::size_t>(k - m + 1));
}

/// |L^k(m,n)| = C(k+1,m) + (n-k+m-1) C(k,m-1).
inline BigInt count_Lk(std::int64_t m, std::int64_t n, std::int64_t k) {
    if (m < 1 || m > k) throw domain_error("count_Lk: need 1 <= m <= k");
    if (n < k - m + 1) throw domain_error("count_Lk: need n >= k-m+1");
    return binomial(k + 1, m) + BigInt(n - k + m - 1) * binomial(k, m - 1);
}

/// Σ_{j=a+1}^{b} rank_gen_gamma(m, n, j), requiring m <= a < b <= n+m-1.
inline QPoly conjecture_sum(std::int64_t a, std::int64_t b, std::int64_t m, std::int64_t n) {
    if (m < 1 || a < m || b <= a) throw domain_error("conjecture_sum: need 1 <= m <= a < b");
    if (b > n + m - 1) throw domain_error("conjecture_sum: need b <= n+m-1");
    QPoly out;
    for (std::int64_t j = a + 1; j <= b; ++j) out += rank_gen_gamma(m, n, j);
    return out;
}

/// The n → ∞ form with the geometric factor dropped:
/// Σ_{j=a+1}^{b} q^(j-a-1) [j-1 choose m-2]_q.
inline QPoly conjecture_sum_limit(std::int64_t a, std::int64_t b, std::int64_t m) {
    if (m < 1 || a < m || b <= a) throw domain_error("conjecture_sum_limit: need 1 <= m <= a < b");
    QPoly out;
    for (std::int64_t j = a + 1; j <= b; ++j) out.add_shifted(gaussian(j - 1, m - 2), static_cast<std::size_t>(j - a - 1));
    return out;
}

/// Whether Σ_{j=a+1}^{b} ω^j [j-1 choose m-2]_ω vanishes for every primitive
/// d-th root of unity ω, decided exactly by reducing the q-polynomial modulo
/// the d-th cyclotomic polynomial. The a,b hypothesis is not enforced here.
inline bool cyclotomic_check(std::int64_t a, std::int64_t b, std::int64_t m, std::int64_t d) {
    if (d <= 1) throw domain_error("cyclotomic_check: need d > 1");
    if (m < 1 || m % d != 0) throw domain_error("cyclotomic_check: d must divide m");
    if (a < 0 || b < a) throw domain_error("cyclotomic_check: need 0 <= a <= b");
    QPoly sum;
    for (std::int64_t j = a + 1; j <= b; ++j) sum.add_shifted(gaussian(j - 1, m - 2), static_cast<std::size_t>(j));
    return reduce_mod_cyclotomic(sum, d).is_zero();
}

}  // namespace kyoung
