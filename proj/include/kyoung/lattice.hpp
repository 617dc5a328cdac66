#pragma once

// The k-Young order: covering relations, comparability and Hasse diagrams.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "kyoung/kskew.hpp"
#include "kyoung/partition.hpp"

namespace kyoung {

enum class Direction { up, down };

namespace detail {

/// Rows of the k-skew diagram whose corner of the given kind carries a
/// (k+1)-residue not seen in any strictly higher corner of that kind.
inline std::vector<std::size_t> topmost_residue_rows(const SkewShape& s, CornerKind kind, std::int32_t k) {
    const auto cs = corners(s, kind);
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    std::vector<std::size_t> rows;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        const auto res = static_cast<std::size_t>(residue(*it, k + 1));
        if (!seen[res]) {
            seen[res] = true;
            rows.push_back(static_cast<std::size_t>(it->row));
        }
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

}  // namespace detail

/// Partitions covering p (up) or covered by p (down) in the k-Young order,
/// read off the (k+1)-residues of the corners of p's k-skew diagram.
/// Sorted lexicographically.
inline std::vector<Partition> covers(const Partition& p, std::int32_t k, Direction dir) {
    detail::require_bounded(p, k, "covers");
    const SkewShape s = k_skew(p, k);
    std::vector<Partition> out;
    if (dir == Direction::up) {
        for (auto r : detail::topmost_residue_rows(s, CornerKind::addable, k)) {
            Partition mu;
            if (try_add_box(p, r, mu) && mu.is_bounded(k)) out.push_back(std::move(mu));
        }
    } else {
        for (auto r : detail::topmost_residue_rows(s, CornerKind::removable, k)) {
            Partition lambda;
            if (try_remove_box(p, r, lambda)) out.push_back(std::move(lambda));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Definitional cover test: every single-box neighbour ν of p is kept when
/// both ν and its k-conjugate are comparable with p's under containment.
inline std::vector<Partition> covers_oracle(const Partition& p, std::int32_t k, Direction dir) {
    detail::require_bounded(p, k, "covers_oracle");
    const Partition pc = k_conjugate(p, k);
    std::vector<Partition> out;
    for (std::size_t r = 1; r <= p.length() + 1; ++r) {
        Partition nu;
        if (dir == Direction::up) {
            if (!try_add_box(p, r, nu) || !nu.is_bounded(k)) continue;
            if (contains(pc, k_conjugate(nu, k))) out.push_back(std::move(nu));
        } else {
            if (!try_remove_box(p, r, nu)) continue;
            if (contains(k_conjugate(nu, k), pc)) out.push_back(std::move(nu));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The interval [a, bound] of the k-Young order, degree-lex sorted.
///
/// Up-closure of a intersected with the down-closure of bound, each search
/// pruned by containment of partitions and of k-conjugates.
inline std::vector<Partition> upper_set_within(const Partition& a, const Partition& bound, std::int32_t k) {
    detail::require_bounded(a, k, "upper_set_within");
    detail::require_bounded(bound, k, "upper_set_within");
    std::vector<Partition> out;
    if (!contains(a, bound)) return out;
    const Partition a_conj = k_conjugate(a, k);
    const Partition bound_conj = k_conjugate(bound, k);
    if (!contains(a_conj, bound_conj)) return out;

    auto closure = [&](const Partition& start, Direction dir) {
        std::unordered_map<std::string, Partition> seen{{start.key(), start}};
        std::deque<Partition> queue{start};
        while (!queue.empty()) {
            Partition v = std::move(queue.front());
            queue.pop_front();
            for (auto& mu : covers(v, k, dir)) {
                const bool inside = dir == Direction::up ? contains(mu, bound) : contains(a, mu);
                if (!inside || seen.count(mu.key())) continue;
                const Partition mc = k_conjugate(mu, k);
                if (dir == Direction::up ? !contains(mc, bound_conj) : !contains(a_conj, mc)) continue;
                seen.emplace(mu.key(), mu);
                queue.push_back(std::move(mu));
            }
        }
        return seen;
    };
    const auto up = closure(a, Direction::up);
    const auto down = closure(bound, Direction::down);
    for (const auto& [key, p] : up) {
        if (down.count(key)) out.push_back(p);
    }
    std::sort(out.begin(), out.end(), DegreeLexLess{});
    return out;
}

/// a ⪯ b in the k-Young order.
inline bool leq(const Partition& a, const Partition& b, std::int32_t k) {
    detail::require_bounded(a, k, "leq");
    detail::require_bounded(b, k, "leq");
    if (!contains(a, b)) return false;
    const Partition b_conj = k_conjugate(b, k);
    if (!contains(k_conjugate(a, k), b_conj)) return false;

    std::unordered_set<std::string> seen{a.key()};
    std::deque<Partition> queue{a};
    while (!queue.empty()) {
        Partition v = std::move(queue.front());
        queue.pop_front();
        if (v == b) return true;
        for (auto& mu : covers(v, k, Direction::up)) {
            if (!contains(mu, b)) continue;
            if (!seen.insert(mu.key()).second) continue;
            if (!contains(k_conjugate(mu, k), b_conj)) continue;
            queue.push_back(std::move(mu));
        }
    }
    return false;
}

/// Ranked cover graph. Vertices are stored rank by rank in degree-lex order;
/// a vertex's index is its position in that flattened list.
class HasseDiagram {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    HasseDiagram(std::int32_t k, std::string description, std::vector<std::vector<Partition>> ranks)
        : k_(k), description_(std::move(description)), ranks_(std::move(ranks)) {
        for (const auto& level : ranks_) {
            for (const auto& p : level) {
                if (!index_.emplace(p.key(), flat_.size()).second) {
                    throw domain_error("HasseDiagram: duplicate vertex " + p.to_string());
                }
                flat_.push_back(p);
            }
        }
        up_.resize(flat_.size());
    }

    [[nodiscard]] std::int32_t k() const noexcept { return k_; }
    [[nodiscard]] const std::string& description() const noexcept { return description_; }
    [[nodiscard]] const std::vector<std::vector<Partition>>& ranks() const noexcept { return ranks_; }
    [[nodiscard]] const std::vector<Partition>& vertices() const noexcept { return flat_; }
    [[nodiscard]] std::size_t size() const noexcept { return flat_.size(); }

    [[nodiscard]] std::optional<std::size_t> index_of(const Partition& p) const {
        auto it = index_.find(p.key());
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    [[nodiscard]] const std::vector<std::size_t>& up(std::size_t v) const { return up_.at(v); }

    /// Edges (lower, upper) sorted by (lower, upper).
    [[nodiscard]] std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t v = 0; v < up_.size(); ++v) {
            for (auto w : up_[v]) out.emplace_back(v, w);
        }
        return out;
    }

    [[nodiscard]] std::size_t edge_count() const noexcept {
        std::size_t n = 0;
        for (const auto& adj : up_) n += adj.size();
        return n;
    }

    /// Vertex counts per rank.
    [[nodiscard]] std::vector<std::size_t> rank_sizes() const {
        std::vector<std::size_t> out;
        out.reserve(ranks_.size());
        for (const auto& level : ranks_) out.push_back(level.size());
        return out;
    }

    void add_edge(std::size_t lower, std::size_t upper) {
        auto& adj = up_.at(lower);
        auto it = std::lower_bound(adj.begin(), adj.end(), upper);
        if (it == adj.end() || *it != upper) adj.insert(it, upper);
    }

private:
    std::int32_t k_;
    std::string description_;
    std::vector<std::vector<Partition>> ranks_;
    std::vector<Partition> flat_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> up_;
};

/// The principal order ideal {μ : μ ⪯ generator} with all cover edges.
/// Built top-down one rank at a time from the down-covers.
inline HasseDiagram build_ideal(const Partition& generator, std::int32_t k) {
    detail::require_bounded(generator, k, "build_ideal");
    const auto top = static_cast<std::size_t>(generator.degree());
    std::vector<std::vector<Partition>> ranks(top + 1);
    ranks[top] = {generator};
    for (std::size_t d = top; d >= 1; --d) {
        std::unordered_set<std::string> seen;
        std::vector<Partition> next;
        for (const auto& v : ranks[d]) {
            for (auto& u : covers(v, k, Direction::down)) {
                if (seen.insert(u.key()).second) next.push_back(std::move(u));
            }
        }
        std::sort(next.begin(), next.end());
        ranks[d - 1] = std::move(next);
    }

    HasseDiagram g(k, "ideal generated by " + generator.to_string(), std::move(ranks));
    for (std::size_t v = 0; v < g.size(); ++v) {
        for (const auto& u : covers(g.vertices()[v], k, Direction::down)) {
            g.add_edge(*g.index_of(u), v);
        }
    }
    return g;
}

/// All k-bounded partitions of degree <= max_degree with their cover edges.
inline HasseDiagram build_graded(std::int32_t k, std::int32_t max_degree) {
    if (k < 1) throw domain_error("build_graded: k must be at least 1");
    if (max_degree < 0) throw domain_error("build_graded: max_degree must be non-negative");
    std::vector<std::vector<Partition>> ranks;
    for (std::int32_t d = 0; d <= max_degree; ++d) ranks.push_back(partitions_of(d, k));
    HasseDiagram g(k, "k-bounded partitions of degree <= " + std::to_string(max_degree), std::move(ranks));
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto& p = g.vertices()[v];
        if (p.degree() == max_degree) continue;
        for (const auto& mu : covers(p, k, Direction::up)) g.add_edge(v, *g.index_of(mu));
    }
    return g;
}

/// Both sides of the rectangle-translation identity for up-covers, plus the
/// order-preservation check on down-covers.
struct TranslationWitness {
    Partition lambda;
    Partition rect;
    std::vector<Partition> covers_of_union;     // {μ : λ∪□ ⋖ μ}
    std::vector<Partition> translated_covers;   // {μ̄∪□ : λ ⋖ μ̄}
    bool translation_equal = false;
    bool down_preserved = false;

    [[nodiscard]] bool ok() const noexcept { return translation_equal && down_preserved; }
};

inline TranslationWitness check_rectangle_translation(const Partition& lambda, const KRectangle& rect, std::int32_t k) {
    if (rect.k() != k) throw domain_error("check_rectangle_translation: rectangle built for a different k");
    detail::require_bounded(lambda, k, "check_rectangle_translation");
    TranslationWitness w;
    w.lambda = lambda;
    w.rect = rect.shape();
    const Partition shifted = union_of(lambda, w.rect);

    w.covers_of_union = covers(shifted, k, Direction::up);
    for (const auto& mu_bar : covers(lambda, k, Direction::up)) {
        w.translated_covers.push_back(union_of(mu_bar, w.rect));
    }
    std::sort(w.translated_covers.begin(), w.translated_covers.end());
    w.translation_equal = w.covers_of_union == w.translated_covers;

    const auto down_union = covers(shifted, k, Direction::down);
    const auto down_lambda = covers(lambda, k, Direction::down);
    w.down_preserved = std::all_of(down_lambda.begin(), down_lambda.end(), [&](const Partition& nu) {
        return std::binary_search(down_union.begin(), down_union.end(), union_of(nu, w.rect));
    });
    return w;
}

}  // namespace kyoung
