#pragma once

// Verification sweeps over parameter grids.
//
// Every check produces a VerificationReport. Theorem-status checks expect
// zero failures (a failure is a bug); conjecture-status checks record
// failures as reproducible counterexamples. Cells whose hypotheses do not
// hold are counted as skips, never as passes.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "kyoung/ideal.hpp"
#include "kyoung/io.hpp"
#include "kyoung/kskew.hpp"
#include "kyoung/lattice.hpp"
#include "kyoung/partition.hpp"
#include "kyoung/qpoly.hpp"
#include "kyoung/rankgen.hpp"

namespace kyoung {

enum class CheckKind { theorem, conjecture };

inline std::string_view to_string(CheckKind k) noexcept { return k == CheckKind::theorem ? "theorem" : "conjecture"; }

/// A finite, sorted, duplicate-free set of integers used for grid axes.
class IntSet {
public:
    IntSet() = default;
    IntSet(std::initializer_list<std::int64_t> v) : values_(v) { normalise(); }
    explicit IntSet(std::vector<std::int64_t> v) : values_(std::move(v)) { normalise(); }

    static IntSet range(std::int64_t lo, std::int64_t hi) {
        std::vector<std::int64_t> v;
        for (auto x = lo; x <= hi; ++x) v.push_back(x);
        return IntSet(std::move(v));
    }

    /// "5", "2..7" or "2,3,5,7".
    static IntSet parse(std::string_view text) {
        auto to_int = [&](std::string_view s) {
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
                throw domain_error("cannot parse integer set '" + std::string(text) + "'");
            }
            return v;
        };
        if (auto dots = text.find(".."); dots != std::string_view::npos) {
            return range(to_int(text.substr(0, dots)), to_int(text.substr(dots + 2)));
        }
        std::vector<std::int64_t> v;
        std::size_t pos = 0;
        while (true) {
            auto comma = text.find(',', pos);
            v.push_back(to_int(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return IntSet(std::move(v));
    }

    /// Accepts an integer, an array of integers, or {"min":lo,"max":hi}.
    static IntSet from_json(const json& j) {
        if (j.is_number_integer()) return IntSet{j.get<std::int64_t>()};
        if (j.is_array()) return IntSet(j.get<std::vector<std::int64_t>>());
        if (j.is_object() && j.contains("min") && j.contains("max")) {
            return range(j.at("min").get<std::int64_t>(), j.at("max").get<std::int64_t>());
        }
        if (j.is_string()) return parse(j.get<std::string>());
        throw domain_error("integer set must be an integer, an array, a \"lo..hi\" string or {min,max}");
    }

    [[nodiscard]] const std::vector<std::int64_t>& values() const noexcept { return values_; }
    [[nodiscard]] bool empty() const noexcept { return values_.empty(); }
    [[nodiscard]] std::int64_t min() const { return values_.front(); }
    [[nodiscard]] std::int64_t max() const { return values_.back(); }
    [[nodiscard]] bool contains(std::int64_t x) const { return std::binary_search(values_.begin(), values_.end(), x); }

    [[nodiscard]] auto begin() const noexcept { return values_.begin(); }
    [[nodiscard]] auto end() const noexcept { return values_.end(); }

    [[nodiscard]] json to_json() const { return json(values_); }

private:
    void normalise() {
        std::sort(values_.begin(), values_.end());
        values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    }

    std::vector<std::int64_t> values_;
};

struct VerificationReport {
    std::string check;
    CheckKind kind = CheckKind::theorem;
    std::int64_t pass = 0;
    std::int64_t fail = 0;
    std::int64_t skip = 0;
    std::vector<json> counterexamples;
    std::vector<std::string> notes;
    std::int64_t elapsed_ms = 0;

    VerificationReport() = default;
    VerificationReport(std::string name, CheckKind k) : check(std::move(name)), kind(k) {}

    /// Cells actually evaluated.
    [[nodiscard]] std::int64_t grid() const noexcept { return pass + fail; }
    [[nodiscard]] bool ok() const noexcept { return fail == 0; }

    void record(bool passed, json params) {
        if (passed) {
            ++pass;
        } else {
            ++fail;
            counterexamples.push_back(std::move(params));
        }
    }

    /// Records a pass/fail cell, building the counterexample lazily.
    template <typename F>
    void record_with(bool passed, F&& make_params) {
        if (passed) {
            ++pass;
        } else {
            ++fail;
            counterexamples.push_back(make_params());
        }
    }

    void merge(const VerificationReport& o) {
        pass += o.pass;
        fail += o.fail;
        skip += o.skip;
        counterexamples.insert(counterexamples.end(), o.counterexamples.begin(), o.counterexamples.end());
        notes.insert(notes.end(), o.notes.begin(), o.notes.end());
        elapsed_ms += o.elapsed_ms;
    }

    /// {"check","kind","grid","pass","fail","skip","counterexamples","notes","elapsed_ms"}
    [[nodiscard]] json to_json() const {
        json j;
        j["check"] = check;
        j["kind"] = std::string(kyoung::to_string(kind));
        j["grid"] = grid();
        j["pass"] = pass;
        j["fail"] = fail;
        j["skip"] = skip;
        j["counterexamples"] = json::array();
        for (const auto& c : counterexamples) j["counterexamples"].push_back(c);
        j["notes"] = notes;
        j["elapsed_ms"] = elapsed_ms;
        return j;
    }
};

/// Fills elapsed_ms when timing is enabled. Otherwise it stays 0 so that
/// reports are byte-for-byte reproducible.
inline void stamp_elapsed(VerificationReport& r, std::chrono::steady_clock::time_point start, bool timing) {
    if (timing) {
        r.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
}

// ---------------------------------------------------------------------------
// Conjecture sweeps
// ---------------------------------------------------------------------------

/// Unimodality of u^k(m,n) when k ≢ -1,0 (mod m), and of u^k + u^(k+1) when
/// k ≡ -1 (mod m) and n > k-m+1, for prime m < k. Cells with k ≡ 0 (mod m),
/// k <= m, or n below the domain are skipped. `n_offset_max` additionally
/// caps n at k + n_offset_max.
inline VerificationReport verify_conjecture_u(const IntSet& ms, const IntSet& ks, const IntSet& ns,
                                              std::optional<std::int64_t> n_offset_max = std::nullopt,
                                              bool timing = false) {
    for (auto m : ms) {
        if (!is_prime(m)) throw domain_error("verify_conjecture_u: m = " + std::to_string(m) + " is not prime");
    }
    VerificationReport r("conjecture-u", CheckKind::conjecture);
    const auto started = std::chrono::steady_clock::now();
    std::int64_t boundary_first = 0;
    std::int64_t boundary_second = 0;
    for (auto m : ms) {
        for (auto k : ks) {
            for (auto n : ns) {
                if (n_offset_max && n > k + *n_offset_max) continue;
                if (k <= m || n < k - m + 1 || k % m == 0) {
                    ++r.skip;
                    continue;
                }
                const bool second = is_minus_one_mod(k, m);
                if (second && n == k - m + 1) {
                    ++boundary_second;
                    ++r.skip;
                    continue;
                }
                if (!second && n == k - m + 1) ++boundary_first;
                QPoly p = rank_gen_gamma(m, n, k);
                if (second) p += rank_gen_gamma(m, n, k + 1);
                r.record_with(is_unimodal(p), [&] {
                    json c;
                    c["m"] = m;
                    c["n"] = n;
                    c["k"] = k;
                    c["clause"] = second ? "u^k+u^(k+1)" : "u^k";
                    c["coefficients"] = to_json(p);
                    return c;
                });
            }
        }
    }
    r.notes.push_back("boundary n=k-m+1 evaluated for the u^k clause in " + std::to_string(boundary_first) + " cells");
    r.notes.push_back("boundary n=k-m+1 skipped for the u^k+u^(k+1) clause in " + std::to_string(boundary_second) +
                      " cells (u^(k+1) needs n >= k-m+2)");
    stamp_elapsed(r, started, timing);
    return r;
}

/// Unimodality of Σ_{j=a+1}^{b} u^j(m,n) for m <= a < b <= n+m-1 whenever
/// a, b ≢ -1 modulo every prime divisor of m. Out-of-domain (a,b) pairs are
/// not part of the grid; hypothesis failures are skipped. Empty `as` / `bs`
/// mean "every admissible value".
inline VerificationReport verify_conjecture_gen(const IntSet& ms, const IntSet& as, const IntSet& bs, const IntSet& ns,
                                                bool timing = false) {
    VerificationReport r("conjecture-gen", CheckKind::conjecture);
    const auto started = std::chrono::steady_clock::now();
    std::int64_t boundary = 0;
    for (auto m : ms) {
        if (m < 2) throw domain_error("verify_conjecture_gen: need m >= 2");
        for (auto n : ns) {
            if (n < 1) throw domain_error("verify_conjecture_gen: need n >= 1");
            const std::int64_t b_top = std::min(n + m - 1, bs.empty() ? n + m - 1 : bs.max());
            for (std::int64_t a = m; a < b_top; ++a) {
                if (!as.empty() && !as.contains(a)) continue;
                // Running sum over b, so each u^j is added once per (m,n,a).
                QPoly sum;
                for (std::int64_t b = a + 1; b <= b_top; ++b) {
                    sum += rank_gen_gamma(m, n, b);
                    if (!bs.empty() && !bs.contains(b)) continue;
                    if (!sieve_hypothesis(a, b, m)) {
                        ++r.skip;
                        continue;
                    }
                    if (b == n + m - 1) ++boundary;
                    r.record_with(is_unimodal(sum), [&] {
                        json c;
                        c["m"] = m;
                        c["n"] = n;
                        c["a"] = a;
                        c["b"] = b;
                        c["coefficients"] = to_json(sum);
                        return c;
                    });
                }
            }
        }
    }
    r.notes.push_back("boundary b=n+m-1 evaluated in " + std::to_string(boundary) + " cells");
    stamp_elapsed(r, started, timing);
    return r;
}

/// Single-cell form with explicit range validation.
inline VerificationReport verify_conjecture_gen(std::int64_t m, std::int64_t a, std::int64_t b, std::int64_t n,
                                                bool timing = false) {
    if (m < 2 || a < m || b <= a || b > n + m - 1) {
        throw domain_error("verify_conjecture_gen: need 2 <= m <= a < b <= n+m-1");
    }
    return verify_conjecture_gen(IntSet{m}, IntSet{a}, IntSet{b}, IntSet{n}, timing);
}

// ---------------------------------------------------------------------------
// Sieved sums (theorem status)
// ---------------------------------------------------------------------------

namespace detail {

inline void check_sieved_cell(VerificationReport& r, std::int64_t m, std::int64_t a, std::int64_t b) {
    const QPoly p = conjecture_sum_limit(a, b, m);
    const auto sums = sieved_sums(p, m);
    BigInt total = 0;
    for (std::int64_t j = a + 1; j <= b; ++j) total += binomial(j - 1, m - 2);
    bool equal = (total % m == 0);
    for (const auto& s : sums) equal = equal && (s * m == total);
    r.record_with(equal, [&] {
        json c;
        c["m"] = m;
        c["a"] = a;
        c["b"] = b;
        c["what"] = "sieved sums";
        json arr = json::array();
        for (const auto& s : sums) arr.push_back(s.str());
        c["sums"] = arr;
        c["total"] = total.str();
        return c;
    });
    for (auto d : nontrivial_divisors(m)) {
        r.record_with(cyclotomic_check(a, b, m, d), [&] {
            json c;
            c["m"] = m;
            c["a"] = a;
            c["b"] = b;
            c["d"] = d;
            c["what"] = "cyclotomic reduction non-zero";
            return c;
        });
    }
}

}  // namespace detail

/// Residue-class sums of Σ_{j=a+1}^{b} q^(j-a-1) [j-1 choose m-2]_q are all
/// (Σ C(j-1,m-2))/m, and the root-of-unity sum vanishes for each divisor
/// d > 1 of m. Throws when the hypotheses fail.
inline VerificationReport verify_sieved(std::int64_t m, std::int64_t a, std::int64_t b, bool timing = false) {
    if (m < 2 || a < m || b <= a) throw domain_error("verify_sieved: need 2 <= m <= a < b");
    if (!sieve_hypothesis(a, b, m)) {
        throw domain_error("verify_sieved: a or b is -1 modulo a prime divisor of m");
    }
    VerificationReport r("sieved", CheckKind::theorem);
    const auto started = std::chrono::steady_clock::now();
    detail::check_sieved_cell(r, m, a, b);
    stamp_elapsed(r, started, timing);
    return r;
}

/// Grid form: every m in `ms` and every m <= a < b with b in `bs` (and a
/// in `as` unless it is empty); pairs failing the hypothesis are skipped.
inline VerificationReport verify_sieved_grid(const IntSet& ms, const IntSet& bs, const IntSet& as = {},
                                             bool timing = false) {
    VerificationReport r("sieved", CheckKind::theorem);
    const auto started = std::chrono::steady_clock::now();
    for (auto m : ms) {
        if (m < 2) throw domain_error("verify_sieved: need m >= 2");
        for (auto b : bs) {
            for (std::int64_t a = m; a < b; ++a) {
                if (!as.empty() && !as.contains(a)) continue;
                if (!sieve_hypothesis(a, b, m)) {
                    ++r.skip;
                    continue;
                }
                detail::check_sieved_cell(r, m, a, b);
            }
        }
    }
    stamp_elapsed(r, started, timing);
    return r;
}

/// For prime m < k with k ≢ -1,0 (mod m): every residue-class sum of
/// [k-1 choose m-2]_q equals C(k-1,m-2)/m.
inline VerificationReport verify_sieved_binomial(const IntSet& ms, const IntSet& ks, bool timing = false) {
    VerificationReport r("sieved-binomial", CheckKind::theorem);
    const auto started = std::chrono::steady_clock::now();
    for (auto m : ms) {
        if (!is_prime(m)) throw domain_error("verify_sieved_binomial: m = " + std::to_string(m) + " is not prime");
        for (auto k : ks) {
            if (k <= m || k % m == 0 || is_minus_one_mod(k, m)) {
                ++r.skip;
                continue;
            }
            const auto sums = sieved_sums(gaussian(k - 1, m - 2), m);
            const BigInt total = binomial(k - 1, m - 2);
            bool equal = total % m == 0;
            for (const auto& s : sums) equal = equal && s * m == total;
            r.record_with(equal, [&] {
                json c;
                c["m"] = m;
                c["k"] = k;
                json arr = json::array();
                for (const auto& s : sums) arr.push_back(s.str());
                c["sums"] = arr;
                return c;
            });
        }
    }
    stamp_elapsed(r, started, timing);
    return r;
}

// ---------------------------------------------------------------------------
// Structural invariants (theorem status)
// ---------------------------------------------------------------------------

struct StructureBounds {
    std::int32_t m_max = 4;
    std::int32_t n_max = 6;
    std::int32_t k_max = 7;
    std::int32_t degree_max = 10;
};

namespace detail {

inline json cell(std::initializer_list<std::pair<const char*, json>> kv) {
    json j;
    for (const auto& [key, value] : kv) j[key] = value;
    return j;
}

/// Every k-bounded partition with 1 <= k <= k_max and degree <= degree_max.
template <typename F>
void for_each_bounded(std::int32_t k_max, std::int32_t degree_max, F&& f) {
    for (std::int32_t k = 1; k <= k_max; ++k) {
        for (std::int32_t d = 0; d <= degree_max; ++d) {
            for (const auto& p : partitions_of(d, k)) f(k, p);
        }
    }
}

/// Every spec m <= m_max, m <= k <= k_max, k-m+1 <= n <= n_max.
template <typename F>
void for_each_ideal(const StructureBounds& b, F&& f) {
    for (std::int32_t m = 1; m <= b.m_max; ++m) {
        for (std::int32_t k = m; k <= b.k_max; ++k) {
            for (std::int32_t n = std::max(1, k - m + 1); n <= b.n_max; ++n) f(IdealSpec(m, n, k));
        }
    }
}

inline json spec_json(const IdealSpec& s) { return cell({{"m", s.m}, {"n", s.n}, {"k", s.k}}); }

inline std::vector<std::int64_t> coefficients_i64(const QPoly& p, std::size_t len) {
    std::vector<std::int64_t> out(len, 0);
    for (std::size_t i = 0; i < p.coefficients().size() && i < len; ++i) {
        out[i] = p.coefficients()[i].convert_to<std::int64_t>();
    }
    return out;
}

inline bool same_set(std::vector<Partition> a, std::vector<Partition> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace detail

/// (λ^ω)^ω = λ, with |λ^ω| = |λ| and λ^ω k-bounded.
inline VerificationReport check_involution(std::int32_t k_max, std::int32_t degree_max) {
    VerificationReport r("involution", CheckKind::theorem);
    detail::for_each_bounded(k_max, degree_max, [&](std::int32_t k, const Partition& p) {
        const Partition c = k_conjugate(p, k);
        const bool ok = c.is_bounded(k) && c.degree() == p.degree() && k_conjugate(c, k) == p;
        r.record_with(ok, [&] { return detail::cell({{"k", k}, {"lambda", to_json(p)}, {"conjugate", to_json(c)}}); });
    });
    return r;
}

/// k_skew output meets the three defining conditions; its outer shape has
/// no hook of length k+1; small-hook partitions are their own k-skew.
inline VerificationReport check_kskew(std::int32_t k_max, std::int32_t degree_max) {
    VerificationReport r("kskew-conditions", CheckKind::theorem);
    detail::for_each_bounded(k_max, degree_max, [&](std::int32_t k, const Partition& p) {
        const SkewShape s = k_skew(p, k);
        bool ok = is_k_skew_of(s, p, k) && avoids_hook(s.outer(), k + 1);
        if (principal_hook(p) <= k) {
            ok = ok && s == SkewShape(p) && k_conjugate(p, k) == conjugate(p);
        }
        r.record_with(ok, [&] { return detail::cell({{"k", k}, {"lambda", to_json(p)}, {"skew", to_json(s)}}); });
    });
    return r;
}

/// Closed form for rectangles agrees with the recursive construction.
inline VerificationReport check_rectangle_conjugates(std::int32_t k_max, std::int32_t n_max) {
    VerificationReport r("rectangle-conjugate", CheckKind::theorem);
    for (std::int32_t k = 1; k <= k_max; ++k) {
        for (std::int32_t m = 1; m <= k; ++m) {
            for (std::int32_t n = 0; n <= n_max; ++n) {
                const Partition closed = rectangle_k_conjugate(m, n, k);
                const Partition direct = k_conjugate(rectangle(m, n), k);
                r.record_with(closed == direct, [&] {
                    return detail::cell({{"m", m}, {"n", n}, {"k", k}, {"closed", to_json(closed)}, {"direct", to_json(direct)}});
                });
            }
        }
    }
    return r;
}

/// (λ ∪ □)^ω = λ^ω ∪ □' for every k-rectangle □.
inline VerificationReport check_rectangle_union(std::int32_t k_max, std::int32_t degree_max) {
    VerificationReport r("rectangle-union", CheckKind::theorem);
    detail::for_each_bounded(k_max, degree_max, [&](std::int32_t k, const Partition& p) {
        const Partition pc = k_conjugate(p, k);
        for (const auto& rect : KRectangle::all(k)) {
            const Partition box = rect.shape();
            const Partition lhs = k_conjugate(union_of(p, box), k);
            const Partition rhs = union_of(pc, conjugate(box));
            r.record_with(lhs == rhs, [&] {
                return detail::cell({{"k", k}, {"lambda", to_json(p)}, {"rect", to_json(box)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
            });
        }
    });
    return r;
}

/// (□, μ)^ω = (□', μ') for μ inside ((ℓ-1)^(k-ℓ)).
inline VerificationReport check_rectangle_block(std::int32_t k_max) {
    VerificationReport r("rectangle-block", CheckKind::theorem);
    for (std::int32_t k = 1; k <= k_max; ++k) {
        for (const auto& rect : KRectangle::all(k)) {
            const Partition box = rect.shape();
            for (const auto& mu : partitions_in_box(rect.width() - 1, k - rect.width())) {
                const Partition lhs = k_conjugate(union_of(box, mu), k);
                const Partition rhs = union_of(conjugate(box), conjugate(mu));
                r.record_with(lhs == rhs, [&] {
                    return detail::cell({{"k", k}, {"rect", to_json(box)}, {"mu", to_json(mu)}, {"lhs", to_json(lhs)}});
                });
            }
        }
    }
    return r;
}

/// With exactly k-ℓ+1 parts equal to ℓ (lowest in row r), λ/^k has addable
/// corners in rows r and r+k-ℓ+1 with the same (k+1)-residue.
inline VerificationReport check_equal_residue_addables(std::int32_t k_max, std::int32_t degree_max) {
    VerificationReport r("equal-residue-addable", CheckKind::theorem);
    detail::for_each_bounded(k_max, degree_max, [&](std::int32_t k, const Partition& nu) {
        for (const auto& rect : KRectangle::all(k)) {
            const std::int32_t ell = rect.width();
            if (std::find(nu.vec().begin(), nu.vec().end(), ell) != nu.vec().end()) continue;
            const Partition p = union_of(nu, rect.shape());
            const auto row = static_cast<std::int32_t>(
                std::count_if(nu.vec().begin(), nu.vec().end(), [&](auto x) { return x > ell; }) + 1);
            const auto cs = corners(k_skew(p, k), CornerKind::addable);
            auto find_row = [&](std::int32_t rr) -> std::optional<Cell> {
                for (const auto& c : cs) {
                    if (c.row == rr) return c;
                }
                return std::nullopt;
            };
            const auto lo = find_row(row);
            const auto hi = find_row(row + rect.height());
            const bool ok = lo && hi && residue(*lo, k + 1) == residue(*hi, k + 1);
            r.record_with(ok, [&] { return detail::cell({{"k", k}, {"lambda", to_json(p)}, {"row", row}}); });
        }
    });
    return r;
}

/// Removable corners of any partition inside (m^(k-m+1)) have pairwise
/// distinct (k+1)-residues.
inline VerificationReport check_distinct_removable_residues(std::int32_t k_max) {
    VerificationReport r("distinct-removable-residues", CheckKind::theorem);
    for (std::int32_t k = 1; k <= k_max; ++k) {
        for (std::int32_t m = 1; m <= k; ++m) {
            for (const auto& p : partitions_in_box(m, k - m + 1)) {
                std::set<int> seen;
                bool ok = true;
                for (const auto& c : corners(SkewShape(p), CornerKind::removable)) {
                    ok = ok && seen.insert(residue(c, k + 1)).second;
                }
                r.record_with(ok, [&] { return detail::cell({{"k", k}, {"m", m}, {"lambda", to_json(p)}}); });
            }
        }
    }
    return r;
}

/// Residue-based covers agree with the definitional single-box test.
inline VerificationReport check_covering_agreement(std::int32_t k_max, std::int32_t degree_max) {
    VerificationReport r("covering-agreement", CheckKind::theorem);
    detail::for_each_bounded(k_max, degree_max, [&](std::int32_t k, const Partition& p) {
        for (auto dir : {Direction::up, Direction::down}) {
            const auto fast = covers(p, k, dir);
            const auto slow = covers_oracle(p, k, dir);
            r.record_with(fast == slow, [&] {
                return detail::cell({{"k", k},
                                     {"lambda", to_json(p)},
                                     {"direction", dir == Direction::up ? "up" : "down"},
                                     {"covers", to_json(fast)},
                                     {"oracle", to_json(slow)}});
            });
        }
    });
    return r;
}

/// {μ : λ∪□ ⋖ μ} = {μ̄∪□ : λ ⋖ μ̄}, and down-covers survive translation.
inline VerificationReport check_rectangle_translation_sweep(std::int32_t k_max, std::int32_t degree_max) {
    VerificationReport r("rectangle-translation", CheckKind::theorem);
    detail::for_each_bounded(k_max, degree_max, [&](std::int32_t k, const Partition& p) {
        for (const auto& rect : KRectangle::all(k)) {
            const auto w = check_rectangle_translation(p, rect, k);
            r.record_with(w.ok(), [&] {
                return detail::cell({{"k", k},
                                     {"lambda", to_json(p)},
                                     {"rect", to_json(w.rect)},
                                     {"lhs", to_json(w.covers_of_union)},
                                     {"rhs", to_json(w.translated_covers)}});
            });
        }
    });
    return r;
}

/// Removing the box of the top row always gives a down-cover.
inline VerificationReport check_top_row_removal(std::int32_t k_max, std::int32_t degree_max) {
    VerificationReport r("top-row-removal", CheckKind::theorem);
    detail::for_each_bounded(k_max, degree_max, [&](std::int32_t k, const Partition& p) {
        if (p.empty()) return;
        Partition lower;
        try_remove_box(p, p.length(), lower);
        const auto down = covers(p, k, Direction::down);
        r.record_with(std::binary_search(down.begin(), down.end(), lower),
                      [&] { return detail::cell({{"k", k}, {"lambda", to_json(p)}}); });
    });
    return r;
}

/// a ⪯ b implies containment of partitions and of k-conjugates; with
/// both principal hooks at most k it reduces to containment.
inline VerificationReport check_weak_subposet(std::int32_t k_max, std::int32_t degree_max) {
    VerificationReport r("weak-subposet", CheckKind::theorem);
    for (std::int32_t k = 1; k <= k_max; ++k) {
        std::vector<Partition> all;
        for (std::int32_t d = 0; d <= degree_max; ++d) {
            auto level = partitions_of(d, k);
            all.insert(all.end(), level.begin(), level.end());
        }
        for (const auto& b : all) {
            for (const auto& a : all) {
                if (a.degree() > b.degree()) continue;
                const bool le = leq(a, b, k);
                bool ok = !le || (contains(a, b) && contains(k_conjugate(a, k), k_conjugate(b, k)));
                if (principal_hook(a) <= k && principal_hook(b) <= k) ok = ok && (le == contains(a, b));
                r.record_with(ok, [&] { return detail::cell({{"k", k}, {"a", to_json(a)}, {"b", to_json(b)}}); });
            }
        }
    }
    return r;
}

/// Vertex sets: the explicit union, the box filter and the lattice search
/// all give the same set, of the predicted size; ideal edges are exactly
/// the single-box containments between members.
inline VerificationReport check_ideal_vertices(const StructureBounds& bounds) {
    VerificationReport r("ideal-vertices", CheckKind::theorem);
    detail::for_each_ideal(bounds, [&](const IdealSpec& spec) {
        const auto listed = enumerate(spec);
        std::vector<Partition> filtered;
        for (const auto& p : partitions_in_box(spec.m, spec.n)) {
            if (is_member(p, spec)) filtered.push_back(p);
        }
        const HasseDiagram g = build_ideal(rectangle(spec.m, spec.n), spec.k);
        const bool same = listed == filtered && listed == g.vertices();
        const bool count = BigInt(listed.size()) == count_Lk(spec.m, spec.n, spec.k);
        std::size_t single_box = 0;
        bool edges_ok = true;
        for (std::size_t v = 0; v < g.size(); ++v) {
            for (auto w : g.up(v)) {
                edges_ok = edges_ok && contains(g.vertices()[v], g.vertices()[w]) &&
                           g.vertices()[w].degree() == g.vertices()[v].degree() + 1;
            }
        }
        for (const auto& p : listed) {
            for (std::size_t row = 1; row <= p.length() + 1; ++row) {
                Partition q;
                if (try_add_box(p, row, q) && is_member(q, spec)) ++single_box;
            }
        }
        edges_ok = edges_ok && single_box == g.edge_count();
        r.record_with(same && count && edges_ok, [&] {
            json c = detail::spec_json(spec);
            c["enumerated"] = listed.size();
            c["filtered"] = filtered.size();
            c["lattice"] = g.size();
            c["formula"] = count_Lk(spec.m, spec.n, spec.k).str();
            return c;
        });
    });
    return r;
}

/// Rank vectors of the enumerated vertices match the closed form and are
/// palindromic.
inline VerificationReport check_rank_generating_function(const StructureBounds& bounds) {
    VerificationReport r("rank-generating-function", CheckKind::theorem);
    detail::for_each_ideal(bounds, [&](const IdealSpec& spec) {
        const RankVector rv = rank_vector(enumerate(spec), spec.top_rank());
        const QPoly closed = rank_gen_Lk(spec.m, spec.n, spec.k);
        const auto expect = detail::coefficients_i64(closed, rv.coefficients.size());
        const bool ok = closed.degree() == spec.top_rank() && rv.coefficients == expect && rv.is_palindromic();
        r.record_with(ok, [&] {
            json c = detail::spec_json(spec);
            c["rank_vector"] = rv.coefficients;
            c["closed_form"] = to_json(closed);
            return c;
        });
    });
    return r;
}

/// For members a, b of L^k(m,n): a ⪯ b exactly when a ⊆ b.
inline VerificationReport check_induced_subposet(const StructureBounds& bounds) {
    VerificationReport r("induced-subposet", CheckKind::theorem);
    detail::for_each_ideal(bounds, [&](const IdealSpec& spec) {
        const auto members = enumerate(spec);
        const Partition top = rectangle(spec.m, spec.n);
        for (const auto& a : members) {
            const auto above = upper_set_within(a, top, spec.k);
            for (const auto& b : members) {
                const bool le = std::binary_search(above.begin(), above.end(), b, DegreeLexLess{});
                r.record_with(le == contains(a, b), [&] {
                    json c = detail::spec_json(spec);
                    c["a"] = to_json(a);
                    c["b"] = to_json(b);
                    c["leq"] = le;
                    return c;
                });
            }
        }
    });
    return r;
}

/// Meet/join closure, bound properties and both distributive laws on a
/// deterministic sample of triples per ideal.
inline VerificationReport check_meet_join(const StructureBounds& bounds, std::size_t samples_per_ideal = 400) {
    VerificationReport r("meet-join", CheckKind::theorem);
    detail::for_each_ideal(bounds, [&](const IdealSpec& spec) {
        const auto members = enumerate(spec);
        std::mt19937_64 rng(static_cast<std::uint64_t>(spec.m * 10007 + spec.n * 101 + spec.k));
        std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
        for (std::size_t s = 0; s < samples_per_ideal; ++s) {
            const auto& x = members[pick(rng)];
            const auto& y = members[pick(rng)];
            const auto& z = members[pick(rng)];
            const Partition mxy = meet(x, y, spec);
            const Partition jxy = join(x, y, spec);
            bool ok = is_member(mxy, spec) && is_member(jxy, spec);
            ok = ok && contains(mxy, x) && contains(mxy, y) && contains(x, jxy) && contains(y, jxy);
            ok = ok && join(x, meet(y, z, spec), spec) == meet(jxy, join(x, z, spec), spec);
            ok = ok && meet(x, join(y, z, spec), spec) == join(mxy, meet(x, z, spec), spec);
            r.record_with(ok, [&] {
                json c = detail::spec_json(spec);
                c["x"] = to_json(x);
                c["y"] = to_json(y);
                c["z"] = to_json(z);
                return c;
            });
        }
    });
    return r;
}

/// The complement map is a degree-complementing, order-reversing involution
/// on members.
inline VerificationReport check_self_duality(const StructureBounds& bounds) {
    VerificationReport r("self-duality", CheckKind::theorem);
    detail::for_each_ideal(bounds, [&](const IdealSpec& spec) {
        const auto members = enumerate(spec);
        std::vector<Partition> duals;
        bool ok = true;
        for (const auto& p : members) {
            const Partition d = complement_dual(p, spec);
            ok = ok && is_member(d, spec) && complement_dual(d, spec) == p && p.degree() + d.degree() == spec.top_rank();
            duals.push_back(d);
        }
        for (std::size_t i = 0; i < members.size() && ok; ++i) {
            for (std::size_t j = 0; j < members.size() && ok; ++j) {
                ok = contains(members[i], members[j]) == contains(duals[j], duals[i]);
            }
        }
        ok = ok && rank_vector(members, spec.top_rank()).is_palindromic();
        r.record_with(ok, [&] { return detail::spec_json(spec); });
    });
    return r;
}

/// Γ^k(m,n): explicit parametrisation matches the short-row filter, its
/// rank vector matches the closed form, which is symmetric about mn/2.
inline VerificationReport check_gamma(const StructureBounds& bounds) {
    VerificationReport r("gamma", CheckKind::theorem);
    detail::for_each_ideal(bounds, [&](const IdealSpec& spec) {
        if (spec.k <= spec.m) return;
        const auto gamma = gamma_set(spec);
        std::vector<Partition> filtered;
        for (const auto& p : partitions_in_box(spec.m, spec.n)) {
            if (short_rows(p, spec.m) == spec.short_row_limit()) filtered.push_back(p);
        }
        const RankVector rv = rank_vector(gamma, spec.top_rank());
        const QPoly closed = rank_gen_gamma(spec.m, spec.n, spec.k);
        const bool ok = gamma == filtered && rv.coefficients == detail::coefficients_i64(closed, rv.coefficients.size()) &&
                        is_symmetric(closed, spec.top_rank()) && rv.is_palindromic();
        r.record_with(ok, [&] {
            json c = detail::spec_json(spec);
            c["gamma_size"] = gamma.size();
            c["closed_form"] = to_json(closed);
            return c;
        });
    });
    return r;
}

/// L^k = L^m ⊎ Γ^(m+1) ⊎ ... ⊎ Γ^k as sets, L^k ⊆ L^(k+1), and the
/// generating function decomposes accordingly.
inline VerificationReport check_stratification(const StructureBounds& bounds) {
    VerificationReport r("stratification", CheckKind::theorem);
    detail::for_each_ideal(bounds, [&](const IdealSpec& spec) {
        std::vector<Partition> pieces = enumerate(IdealSpec(spec.m, spec.n, spec.m));
        QPoly sum = QPoly::geometric(1, static_cast<std::size_t>(spec.top_rank()) + 1);
        for (std::int32_t j = spec.m + 1; j <= spec.k; ++j) {
            const auto g = gamma_set(IdealSpec(spec.m, spec.n, j));
            pieces.insert(pieces.end(), g.begin(), g.end());
            sum += rank_gen_gamma(spec.m, spec.n, j);
        }
        const auto whole = enumerate(spec);
        std::unordered_set<Partition, PartitionHash> uniq(pieces.begin(), pieces.end());
        bool ok = uniq.size() == pieces.size() && detail::same_set(pieces, whole);
        ok = ok && sum == rank_gen_Lk(spec.m, spec.n, spec.k);
        const auto next = enumerate(IdealSpec(spec.m, spec.n, spec.k + 1));
        ok = ok && std::includes(next.begin(), next.end(), whole.begin(), whole.end(), DegreeLexLess{});
        r.record_with(ok, [&] { return detail::spec_json(spec); });
    });
    return r;
}

/// No cover edge of L^k(m,n) skips a stratum.
inline VerificationReport check_strata_edges(const StructureBounds& bounds) {
    VerificationReport r("strata-edges", CheckKind::theorem);
    detail::for_each_ideal(bounds, [&](const IdealSpec& spec) {
        const HasseDiagram g = build_ideal(rectangle(spec.m, spec.n), spec.k);
        auto stratum = [&](const Partition& p) { return std::max(1, short_rows(p, spec.m)); };
        bool ok = true;
        for (const auto& [lo, hi] : g.edges()) {
            ok = ok && std::abs(stratum(g.vertices()[lo]) - stratum(g.vertices()[hi])) <= 1;
        }
        r.record_with(ok, [&] { return detail::spec_json(spec); });
    });
    return r;
}

/// Runs every structural family within the given bounds.
inline std::vector<VerificationReport> verify_structure(const StructureBounds& b = {}, bool timing = false) {
    std::vector<VerificationReport> out;
    auto run = [&](auto&& fn) {
        const auto start = std::chrono::steady_clock::now();
        VerificationReport rep = fn();
        stamp_elapsed(rep, start, timing);
        out.push_back(std::move(rep));
    };
    const std::int32_t small_degree = std::min(b.degree_max, 6);
    run([&] { return check_involution(b.k_max, b.degree_max); });
    run([&] { return check_kskew(b.k_max, b.degree_max); });
    run([&] { return check_rectangle_conjugates(b.k_max, b.n_max); });
    run([&] { return check_rectangle_union(b.k_max, b.degree_max); });
    run([&] { return check_rectangle_block(b.k_max); });
    run([&] { return check_equal_residue_addables(b.k_max, b.degree_max); });
    run([&] { return check_distinct_removable_residues(b.k_max); });
    run([&] { return check_covering_agreement(b.k_max, b.degree_max); });
    run([&] { return check_rectangle_translation_sweep(b.k_max, b.degree_max); });
    run([&] { return check_top_row_removal(b.k_max, b.degree_max); });
    run([&] { return check_weak_subposet(b.k_max, small_degree); });
    run([&] { return check_ideal_vertices(b); });
    run([&] { return check_rank_generating_function(b); });
    run([&] { return check_induced_subposet(b); });
    run([&] { return check_meet_join(b); });
    run([&] { return check_self_duality(b); });
    run([&] { return check_gamma(b); });
    run([&] { return check_stratification(b); });
    run([&] { return check_strata_edges(b); });
    return out;
}

}  // namespace kyoung
