#pragma once

// The order ideals L^k(m,n) = {μ ⪯ (m^n)} and their Γ strata.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "kyoung/partition.hpp"

namespace kyoung {

/// Parameters of L^k(m,n): an m-wide, n-tall rectangle generator, k >= m.
struct IdealSpec {
    std::int32_t m = 1;
    std::int32_t n = 1;
    std::int32_t k = 1;

    IdealSpec() = default;
    IdealSpec(std::int32_t m_, std::int32_t n_, std::int32_t k_) : m(m_), n(n_), k(k_) { validate(); }

    void validate() const {
        if (m < 1 || n < 1) throw domain_error("IdealSpec: m and n must be positive");
        if (k < m) throw domain_error("IdealSpec: k must be at least m");
    }

    /// Maximum number of rows shorter than m.
    [[nodiscard]] std::int32_t short_row_limit() const noexcept { return k - m + 1; }
    [[nodiscard]] std::int64_t top_rank() const noexcept { return std::int64_t{m} * n; }

    [[nodiscard]] std::string to_string() const {
        return "L^" + std::to_string(k) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    }

    friend bool operator==(const IdealSpec&, const IdealSpec&) = default;
};

/// Counts of elements per rank, index 0..top_rank.
struct RankVector {
    std::vector<std::int64_t> coefficients;

    [[nodiscard]] std::int64_t total() const noexcept {
        return std::accumulate(coefficients.begin(), coefficients.end(), std::int64_t{0});
    }

    [[nodiscard]] bool is_palindromic() const noexcept {
        return std::equal(coefficients.begin(), coefficients.end(), coefficients.rbegin());
    }

    friend bool operator==(const RankVector&, const RankVector&) = default;
};

/// Positive parts strictly smaller than m.
inline std::int32_t short_rows(const Partition& p, std::int32_t m) noexcept {
    std::int32_t n = 0;
    for (auto x : p.parts()) {
        if (x < m) ++n;
    }
    return n;
}

inline bool fits_in_box(const Partition& p, std::int32_t m, std::int32_t n) noexcept {
    return p.width() <= m && static_cast<std::int64_t>(p.length()) <= n;
}

/// Membership in L^k(m,n): fits in the m×n box with at most k-m+1 rows
/// shorter than m.
inline bool is_member(const Partition& p, const IdealSpec& spec) noexcept {
    return fits_in_box(p, spec.m, spec.n) && short_rows(p, spec.m) <= spec.short_row_limit();
}

namespace detail {

/// (m^a, μ_1+shift, ..., μ_len+shift) for every μ in the width×len box,
/// padded with zeros so exactly `len` tail parts are emitted.
inline void emit_shifted(std::int32_t m, std::int32_t a, std::int32_t len, std::int32_t width, std::int32_t shift,
                         std::vector<Partition>& out) {
    if (width < 0) return;
    for (const auto& mu : partitions_in_box(width, len)) {
        std::vector<Partition::part_type> parts(static_cast<std::size_t>(a), m);
        for (std::int32_t i = 1; i <= len; ++i) parts.push_back(mu.row(static_cast<std::size_t>(i)) + shift);
        out.emplace_back(std::move(parts));
    }
}

inline void sort_vertices(std::vector<Partition>& v) { std::sort(v.begin(), v.end(), DegreeLexLess{}); }

}  // namespace detail

/// The vertices of L^k(m,n) in degree-lex order, built as the disjoint union
/// of the partitions inside (m^(k-m+1)) and the blocks (m^i, μ + 1^(k-m+1)).
inline std::vector<Partition> enumerate(const IdealSpec& spec) {
    spec.validate();
    const std::int32_t h = spec.short_row_limit();
    std::vector<Partition> out;
    if (spec.n < h) {
        out = partitions_in_box(spec.m, spec.n);
        return out;
    }
    out = partitions_in_box(spec.m, h);
    for (std::int32_t i = 1; i <= spec.n - h; ++i) {
        detail::emit_shifted(spec.m, i, h, spec.m - 1, 1, out);
    }
    detail::sort_vertices(out);
    return out;
}

/// Γ^k(m,n) = L^k(m,n) \ L^(k-1)(m,n): exactly k-m+1 rows shorter than m.
/// Empty when n < k-m+1.
inline std::vector<Partition> gamma_set(const IdealSpec& spec) {
    spec.validate();
    if (spec.k <= spec.m) throw domain_error("gamma_set: requires k > m");
    const std::int32_t h = spec.short_row_limit();
    std::vector<Partition> out;
    if (spec.n < h) return out;
    for (std::int32_t a = 0; a <= spec.n - h; ++a) {
        detail::emit_shifted(spec.m, a, h, spec.m - 2, 1, out);
    }
    detail::sort_vertices(out);
    return out;
}

/// The complement of p in (m^n) rotated by 180 degrees.
inline Partition complement_dual(const Partition& p, const IdealSpec& spec) {
    if (!is_member(p, spec)) throw domain_error("complement_dual: " + p.to_string() + " is not in " + spec.to_string());
    std::vector<Partition::part_type> out(static_cast<std::size_t>(spec.n));
    for (std::int32_t i = 1; i <= spec.n; ++i) {
        out[static_cast<std::size_t>(i - 1)] = spec.m - p.row(static_cast<std::size_t>(spec.n + 1 - i));
    }
    return Partition(std::move(out));
}

/// Meet in L^k(m,n): intersection of diagrams.
inline Partition meet(const Partition& a, const Partition& b, const IdealSpec& spec) {
    if (!is_member(a, spec) || !is_member(b, spec)) throw domain_error("meet: arguments must be members of " + spec.to_string());
    return intersect(a, b);
}

/// Join in L^k(m,n): union of diagrams.
inline Partition join(const Partition& a, const Partition& b, const IdealSpec& spec) {
    if (!is_member(a, spec) || !is_member(b, spec)) throw domain_error("join: arguments must be members of " + spec.to_string());
    return cell_union(a, b);
}

inline RankVector rank_vector(const std::vector<Partition>& vertices, std::int64_t top_rank) {
    if (top_rank < 0) throw domain_error("rank_vector: negative top rank");
    RankVector rv;
    rv.coefficients.assign(static_cast<std::size_t>(top_rank) + 1, 0);
    for (const auto& p : vertices) {
        if (p.degree() > top_rank) {
            throw domain_error("rank_vector: " + p.to_string() + " exceeds rank " + std::to_string(top_rank));
        }
        ++rv.coefficients[static_cast<std::size_t>(p.degree())];
    }
    return rv;
}

}  // namespace kyoung
