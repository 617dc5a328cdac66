#pragma once

// Partitions, cells and skew shapes.
//
// Diagrams are drawn in French notation: row 1 is the bottom row and holds
// the largest part, row indices grow upward, columns grow to the right.
// All coordinates are 1-based.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kyoung {

/// Thrown when an argument violates a documented precondition.
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A weakly decreasing sequence of positive integers.
class Partition {
public:
    using part_type = std::int32_t;

    Partition() = default;

    Partition(std::initializer_list<part_type> parts)
        : Partition(std::vector<part_type>(parts)) {}

    /// Trailing zeros are dropped; anything else that is not weakly
    /// decreasing and non-negative is rejected.
    explicit Partition(std::vector<part_type> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) {
            parts_.pop_back();
        }
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) {
                throw domain_error("partition parts must be positive");
            }
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw domain_error("partition parts must be weakly decreasing");
            }
        }
        degree_ = std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
    }

    /// Sorts an arbitrary multiset of non-negative parts into a partition.
    static Partition from_multiset(std::vector<part_type> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    [[nodiscard]] std::span<const part_type> parts() const noexcept { return parts_; }
    [[nodiscard]] const std::vector<part_type>& vec() const noexcept { return parts_; }

    [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] std::int64_t degree() const noexcept { return degree_; }

    /// The largest part, 0 for the empty partition.
    [[nodiscard]] part_type width() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// 1-based part access; rows past the length read as 0.
    [[nodiscard]] part_type row(std::size_t i) const noexcept {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }

    [[nodiscard]] bool is_bounded(part_type k) const noexcept { return width() <= k; }

    /// Canonical byte encoding (LEB128 per part). Two partitions are equal
    /// iff their keys are equal.
    [[nodiscard]] std::string key() const {
        std::string out;
        out.reserve(parts_.size());
        for (auto p : parts_) {
            auto v = static_cast<std::uint32_t>(p);
            do {
                auto byte = static_cast<unsigned char>(v & 0x7f);
                v >>= 7;
                if (v != 0) byte |= 0x80;
                out.push_back(static_cast<char>(byte));
            } while (v != 0);
        }
        return out;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    /// Lexicographic on parts.
    friend auto operator<=>(const Partition& a, const Partition& b) noexcept {
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Partition& a, const Partition& b) noexcept {
        return a.parts_ == b.parts_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
        return os << p.to_string();
    }

private:
    std::vector<part_type> parts_;
    std::int64_t degree_ = 0;
};

/// Degree first, then lexicographic. The canonical vertex order.
struct DegreeLexLess {
    bool operator()(const Partition& a, const Partition& b) const noexcept {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    }
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : p.parts()) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

struct Cell {
    std::int32_t row = 1;
    std::int32_t col = 1;

    friend auto operator<=>(const Cell&, const Cell&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Cell& c) {
        return os << '(' << c.row << ',' << c.col << ')';
    }
};

/// (col - row) mod modulus, normalised into [0, modulus).
inline int residue(const Cell& c, int modulus) {
    if (modulus < 1) throw domain_error("residue modulus must be positive");
    int r = (c.col - c.row) % modulus;
    return r < 0 ? r + modulus : r;
}

/// Column reading: result[j] = #{i : p[i] >= j}.
inline Partition conjugate(const Partition& p) {
    std::vector<Partition::part_type> out(static_cast<std::size_t>(p.width()), 0);
    for (auto part : p.parts()) {
        for (Partition::part_type j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(out));
}

/// inner ⊆ outer, missing parts read as 0.
inline bool contains(const Partition& inner, const Partition& outer) noexcept {
    if (inner.length() > outer.length()) return false;
    for (std::size_t i = 1; i <= inner.length(); ++i) {
        if (inner.row(i) > outer.row(i)) return false;
    }
    return true;
}

/// Weakly decreasing rearrangement of the parts of both.
inline Partition union_of(const Partition& a, const Partition& b) {
    std::vector<Partition::part_type> merged;
    merged.reserve(a.length() + b.length());
    std::merge(a.vec().begin(), a.vec().end(), b.vec().begin(), b.vec().end(),
               std::back_inserter(merged), std::greater<>());
    return Partition(std::move(merged));
}

/// Componentwise sum of parts.
inline Partition sum_of(const Partition& a, const Partition& b) {
    std::vector<Partition::part_type> out(std::max(a.length(), b.length()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.row(i + 1) + b.row(i + 1);
    return Partition(std::move(out));
}

/// Componentwise minimum (diagram intersection).
inline Partition intersect(const Partition& a, const Partition& b) {
    std::vector<Partition::part_type> out(std::min(a.length(), b.length()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(a.row(i + 1), b.row(i + 1));
    return Partition(std::move(out));
}

/// Componentwise maximum (diagram union).
inline Partition cell_union(const Partition& a, const Partition& b) {
    std::vector<Partition::part_type> out(std::max(a.length(), b.length()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a.row(i + 1), b.row(i + 1));
    return Partition(std::move(out));
}

/// p + e_r; returns false when the result is not a partition.
inline bool try_add_box(const Partition& p, std::size_t r, Partition& out) {
    if (r < 1 || r > p.length() + 1) return false;
    if (r > 1 && p.row(r) + 1 > p.row(r - 1)) return false;
    std::vector<Partition::part_type> v = p.vec();
    if (r == p.length() + 1) {
        v.push_back(1);
    } else {
        ++v[r - 1];
    }
    out = Partition(std::move(v));
    return true;
}

/// p - e_r; returns false when the result is not a partition.
inline bool try_remove_box(const Partition& p, std::size_t r, Partition& out) {
    if (r < 1 || r > p.length()) return false;
    if (p.row(r) - 1 < p.row(r + 1)) return false;
    std::vector<Partition::part_type> v = p.vec();
    --v[r - 1];
    out = Partition(std::move(v));
    return true;
}

/// The diagram outer/inner. Row i holds the cells inner[i] < col <= outer[i].
class SkewShape {
public:
    SkewShape() = default;

    SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!contains(inner_, outer_)) {
            throw domain_error("skew shape requires inner ⊆ outer");
        }
    }

    /// Straight shape p/∅.
    explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}

    [[nodiscard]] const Partition& outer() const noexcept { return outer_; }
    [[nodiscard]] const Partition& inner() const noexcept { return inner_; }

    [[nodiscard]] std::size_t rows() const noexcept { return outer_.length(); }
    [[nodiscard]] std::int64_t size() const noexcept { return outer_.degree() - inner_.degree(); }

    /// Number of cells in row i.
    [[nodiscard]] std::int32_t row_length(std::size_t i) const noexcept {
        return outer_.row(i) - inner_.row(i);
    }

    [[nodiscard]] bool has_cell(const Cell& c) const noexcept {
        if (c.row < 1 || c.col < 1) return false;
        auto i = static_cast<std::size_t>(c.row);
        return inner_.row(i) < c.col && c.col <= outer_.row(i);
    }

    /// Cells of the diagram in column j.
    [[nodiscard]] std::int32_t column_length(std::int32_t j) const noexcept {
        std::int32_t n = 0;
        for (std::size_t i = 1; i <= rows(); ++i) {
            if (inner_.row(i) < j && j <= outer_.row(i)) ++n;
        }
        return n;
    }

    /// Lengths of all columns 1..outer.width(), left to right.
    [[nodiscard]] std::vector<std::int32_t> column_lengths() const {
        std::vector<std::int32_t> cols(static_cast<std::size_t>(outer_.width()), 0);
        for (std::size_t i = 1; i <= rows(); ++i) {
            for (auto j = inner_.row(i) + 1; j <= outer_.row(i); ++j) ++cols[static_cast<std::size_t>(j - 1)];
        }
        return cols;
    }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

    friend std::ostream& operator<<(std::ostream& os, const SkewShape& s) {
        return os << s.outer_ << '/' << s.inner_;
    }

private:
    Partition outer_;
    Partition inner_;
};

/// Hook of any square of the outer shape, counting only cells of the skew
/// diagram: the arm to the right, the leg above and the square itself.
inline std::int32_t hook_length(const SkewShape& s, const Cell& c) {
    if (c.row < 1 || c.col < 1 || static_cast<std::size_t>(c.row) > s.rows() ||
        c.col > s.outer().row(static_cast<std::size_t>(c.row))) {
        throw domain_error("hook_length: cell lies outside the outer shape");
    }
    const auto i = static_cast<std::size_t>(c.row);
    const auto j = c.col;
    std::int32_t arm = s.outer().row(i) - std::max(j, s.inner().row(i));
    std::int32_t leg = 0;
    for (std::size_t r = i + 1; r <= s.rows(); ++r) {
        if (s.inner().row(r) < j && j <= s.outer().row(r)) ++leg;
    }
    return arm + leg + (s.has_cell(c) ? 1 : 0);
}

enum class CornerKind { removable, addable };

/// Corners of a skew shape sorted by increasing row.
///
/// (1, outer[1]) is always removable when the first row is non-empty and
/// (rows + 1, 1) is always addable. Row 0 and column 0 count as occupied.
inline std::vector<Cell> corners(const SkewShape& s, CornerKind kind) {
    std::vector<Cell> out;
    const std::size_t n = s.rows();
    if (kind == CornerKind::removable) {
        for (std::size_t i = 1; i <= n; ++i) {
            if (s.row_length(i) == 0) continue;
            Cell c{static_cast<std::int32_t>(i), s.outer().row(i)};
            bool above_free = !s.has_cell(Cell{c.row + 1, c.col});
            if (i == 1 || above_free) out.push_back(c);
        }
        return out;
    }
    auto occupied = [&](std::int32_t r, std::int32_t col) {
        return r == 0 || col == 0 || s.has_cell(Cell{r, col});
    };
    for (std::size_t i = 1; i <= n + 1; ++i) {
        const auto r = static_cast<std::int32_t>(i);
        const std::int32_t col = s.outer().row(i) + 1;
        if (i == n + 1) {
            out.push_back(Cell{r, 1});
            continue;
        }
        if (occupied(r, col - 1) && occupied(r - 1, col)) out.push_back(Cell{r, col});
    }
    return out;
}

/// The rectangle (width^(k - width + 1)); its corner cell has hook exactly k.
class KRectangle {
public:
    KRectangle(std::int32_t width, std::int32_t k) : width_(width), k_(k) {
        if (k < 1 || width < 1 || width > k) {
            throw domain_error("k-rectangle width must lie in 1..k");
        }
    }

    [[nodiscard]] std::int32_t width() const noexcept { return width_; }
    [[nodiscard]] std::int32_t height() const noexcept { return k_ - width_ + 1; }
    [[nodiscard]] std::int32_t k() const noexcept { return k_; }

    [[nodiscard]] Partition shape() const {
        return Partition(std::vector<Partition::part_type>(static_cast<std::size_t>(height()), width_));
    }

    /// All k-rectangles for a given k, narrowest first.
    static std::vector<KRectangle> all(std::int32_t k) {
        std::vector<KRectangle> out;
        for (std::int32_t w = 1; w <= k; ++w) out.emplace_back(w, k);
        return out;
    }

private:
    std::int32_t width_;
    std::int32_t k_;
};

/// All partitions of `degree` with parts at most `max_part` (max_part < 0
/// means unbounded), in lexicographic order.
inline std::vector<Partition> partitions_of(std::int32_t degree, std::int32_t max_part = -1) {
    std::vector<Partition> out;
    if (degree < 0) return out;
    if (max_part < 0 || max_part > degree) max_part = degree;
    std::vector<Partition::part_type> cur;
    std::function<void(std::int32_t, std::int32_t)> rec = [&](std::int32_t left, std::int32_t cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::int32_t p = 1; p <= std::min(left, cap); ++p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(degree, max_part);
    std::sort(out.begin(), out.end());
    return out;
}

/// All partitions fitting in a box of `max_rows` rows and parts <= `max_part`,
/// in degree-lex order.
inline std::vector<Partition> partitions_in_box(std::int32_t max_part, std::int32_t max_rows) {
    std::vector<Partition> out;
    std::vector<Partition::part_type> cur;
    std::function<void(std::int32_t)> rec = [&](std::int32_t cap) {
        out.emplace_back(cur);
        if (static_cast<std::int32_t>(cur.size()) == max_rows) return;
        for (std::int32_t p = 1; p <= cap; ++p) {
            cur.push_back(p);
            rec(p);
            cur.pop_back();
        }
    };
    if (max_part >= 0 && max_rows >= 0) rec(max_part);
    std::sort(out.begin(), out.end(), DegreeLexLess{});
    return out;
}

}  // namespace kyoung
