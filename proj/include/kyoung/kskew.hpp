#pragma once

// k-skew diagrams, k-conjugation and the bounded-partition / (k+1)-core map.

#include <cstdint>
#include <vector>

#include "kyoung/partition.hpp"

namespace kyoung {

namespace detail {

inline void require_bounded(const Partition& p, std::int32_t k, const char* what) {
    if (k < 1) throw domain_error(std::string(what) + ": k must be at least 1");
    if (!p.is_bounded(k)) {
        throw domain_error(std::string(what) + ": " + p.to_string() + " is not " + std::to_string(k) +
                           "-bounded");
    }
}

}  // namespace detail

/// The k-skew diagram of a k-bounded partition.
///
/// Rows are stacked from the top (smallest part) down. Each new bottom row
/// is slid as far left as the skew condition allows while keeping every hook
/// in that row at most k. Cells already placed never change hook when a row
/// is added underneath, so only the new row needs checking.
inline SkewShape k_skew(const Partition& p, std::int32_t k) {
    detail::require_bounded(p, k, "k_skew");
    const std::size_t n = p.length();
    // Filled top-down, so index 0 is the topmost row.
    std::vector<std::int32_t> inner_td;
    std::vector<std::int32_t> outer_td;
    inner_td.reserve(n);
    outer_td.reserve(n);
    std::vector<std::int32_t> col_height;

    for (std::size_t idx = n; idx >= 1; --idx) {
        const std::int32_t len = p.row(idx);
        std::int32_t start = 1;
        if (!outer_td.empty()) {
            start = std::max(inner_td.back() + 1, outer_td.back() - len + 1);
            start = std::max(start, 1);
        }
        for (;; ++start) {
            bool ok = true;
            const std::int32_t last = start + len - 1;
            for (std::int32_t j = start; j <= last && ok; ++j) {
                const std::int32_t leg =
                    j <= static_cast<std::int32_t>(col_height.size()) ? col_height[static_cast<std::size_t>(j - 1)] : 0;
                if ((last - j) + leg + 1 > k) ok = false;
            }
            if (ok) break;
        }
        const std::int32_t last = start + len - 1;
        if (static_cast<std::int32_t>(col_height.size()) < last) col_height.resize(static_cast<std::size_t>(last), 0);
        for (std::int32_t j = start; j <= last; ++j) ++col_height[static_cast<std::size_t>(j - 1)];
        inner_td.push_back(start - 1);
        outer_td.push_back(last);
    }

    std::vector<Partition::part_type> outer(outer_td.rbegin(), outer_td.rend());
    std::vector<Partition::part_type> inner(inner_td.rbegin(), inner_td.rend());
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

/// Column lengths of the k-skew diagram, sorted decreasing.
inline Partition k_conjugate(const Partition& p, std::int32_t k) {
    const SkewShape s = k_skew(p, k);
    return Partition::from_multiset(s.column_lengths());
}

/// The (k+1)-core attached to p: the outer shape of its k-skew diagram.
inline Partition to_core(const Partition& p, std::int32_t k) {
    return k_skew(p, k).outer();
}

/// Closed form for the k-conjugate of the rectangle (m^n).
inline Partition rectangle_k_conjugate(std::int32_t m, std::int32_t n, std::int32_t k) {
    if (k < 1 || m < 1 || m > k) throw domain_error("rectangle_k_conjugate: need 1 <= m <= k");
    if (n < 0) throw domain_error("rectangle_k_conjugate: n must be non-negative");
    const std::int32_t h = k - m + 1;
    const std::int32_t b = n % h;
    const std::int32_t a = m * (n / h);
    std::vector<Partition::part_type> parts(static_cast<std::size_t>(a), h);
    if (b > 0) parts.insert(parts.end(), static_cast<std::size_t>(m), b);
    return Partition(std::move(parts));
}

/// Checks the three defining properties of a k-skew diagram of p: row i
/// has p_i cells, no cell has hook above k, and every square below the
/// diagram has hook above k.
inline bool is_k_skew_of(const SkewShape& s, const Partition& p, std::int32_t k) {
    if (s.rows() != p.length()) return false;
    for (std::size_t i = 1; i <= s.rows(); ++i) {
        if (s.row_length(i) != p.row(i)) return false;
        for (std::int32_t j = 1; j <= s.outer().row(i); ++j) {
            const std::int32_t h = hook_length(s, Cell{static_cast<std::int32_t>(i), j});
            const bool below = j <= s.inner().row(i);
            if (below ? h <= k : h > k) return false;
        }
    }
    return true;
}

/// True when no cell of the straight shape p has hook length exactly h.
inline bool avoids_hook(const Partition& p, std::int32_t h) {
    const SkewShape s(p);
    for (std::size_t i = 1; i <= p.length(); ++i) {
        for (std::int32_t j = 1; j <= p.row(i); ++j) {
            if (hook_length(s, Cell{static_cast<std::int32_t>(i), j}) == h) return false;
        }
    }
    return true;
}

/// Largest hook of the straight shape p, i.e. h_(1,1)(p); 0 for ∅.
inline std::int32_t principal_hook(const Partition& p) {
    if (p.empty()) return 0;
    return p.width() + static_cast<std::int32_t>(p.length()) - 1;
}

/// The rectangle (m^n).
inline Partition rectangle(std::int32_t m, std::int32_t n) {
    if (m < 0 || n < 0) throw domain_error("rectangle: negative side");
    if (m == 0) return {};
    return Partition(std::vector<Partition::part_type>(static_cast<std::size_t>(n), m));
}

}  // namespace kyoung
