#pragma once

// Exact polynomials in q with integer coefficients.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kyoung/partition.hpp"

namespace kyoung {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial, coefficient i multiplies q^i. Never stores trailing
/// zeros, so the zero polynomial has no coefficients.
template <typename Int>
class BasicQPoly {
public:
    using coefficient_type = Int;

    BasicQPoly() = default;

    explicit BasicQPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    BasicQPoly(std::initializer_list<long long> coeffs) {
        c_.reserve(coeffs.size());
        for (auto x : coeffs) c_.emplace_back(x);
        trim();
    }

    static BasicQPoly constant(Int value) { return BasicQPoly(std::vector<Int>{std::move(value)}); }

    /// value · q^power
    static BasicQPoly monomial(std::size_t power, Int value = Int(1)) {
        std::vector<Int> c(power + 1);
        c[power] = std::move(value);
        return BasicQPoly(std::move(c));
    }

    /// 1 + q^step + q^(2 step) + ... with `count` terms (zero when count == 0).
    static BasicQPoly geometric(std::size_t step, std::size_t count) {
        if (count == 0) return {};
        std::vector<Int> c(step * (count - 1) + 1);
        for (std::size_t t = 0; t < count; ++t) c[t * step] += 1;
        return BasicQPoly(std::move(c));
    }

    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }

    /// Highest power with a non-zero coefficient, -1 for the zero polynomial.
    [[nodiscard]] std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }

    /// Lowest power with a non-zero coefficient, -1 for the zero polynomial.
    [[nodiscard]] std::int64_t low_degree() const noexcept {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] != 0) return static_cast<std::int64_t>(i);
        }
        return -1;
    }

    [[nodiscard]] const std::vector<Int>& coefficients() const noexcept { return c_; }

    [[nodiscard]] Int coeff(std::int64_t i) const {
        if (i < 0 || i >= static_cast<std::int64_t>(c_.size())) return Int(0);
        return c_[static_cast<std::size_t>(i)];
    }

    /// Value at q = 1.
    [[nodiscard]] Int at_one() const {
        Int s = 0;
        for (const auto& x : c_) s += x;
        return s;
    }

    [[nodiscard]] BasicQPoly shifted(std::size_t power) const {
        if (is_zero()) return {};
        std::vector<Int> c(power, Int(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return BasicQPoly(std::move(c));
    }

    BasicQPoly& operator+=(const BasicQPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    BasicQPoly& operator-=(const BasicQPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    /// Adds value · q^power · o without materialising the shifted copy.
    void add_shifted(const BasicQPoly& o, std::size_t power, const Int& value = Int(1)) {
        if (o.is_zero() || value == 0) return;
        if (o.c_.size() + power > c_.size()) c_.resize(o.c_.size() + power);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i + power] += value * o.c_[i];
        trim();
    }

    friend BasicQPoly operator+(BasicQPoly a, const BasicQPoly& b) { return a += b; }
    friend BasicQPoly operator-(BasicQPoly a, const BasicQPoly& b) { return a -= b; }

    friend BasicQPoly operator*(const BasicQPoly& a, const BasicQPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return BasicQPoly(std::move(c));
    }

    friend BasicQPoly operator*(const Int& s, const BasicQPoly& p) {
        std::vector<Int> c = p.c_;
        for (auto& x : c) x *= s;
        return BasicQPoly(std::move(c));
    }

    /// Long division by a divisor whose leading coefficient is ±1, so the
    /// quotient and remainder stay integral.
    friend std::pair<BasicQPoly, BasicQPoly> divmod(const BasicQPoly& num, const BasicQPoly& den) {
        if (den.is_zero()) throw domain_error("divmod: division by the zero polynomial");
        const Int& lead = den.c_.back();
        if (lead != 1 && lead != -1) throw domain_error("divmod: divisor must have unit leading coefficient");
        std::vector<Int> r = num.c_;
        const std::size_t dd = den.c_.size() - 1;
        if (r.size() <= dd) return {BasicQPoly{}, num};
        std::vector<Int> q(r.size() - dd);
        for (std::size_t i = r.size(); i-- > dd;) {
            if (r[i] == 0) continue;
            Int t = lead == 1 ? r[i] : Int(-r[i]);
            q[i - dd] = t;
            for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] -= t * den.c_[j];
        }
        return {BasicQPoly(std::move(q)), BasicQPoly(std::move(r))};
    }

    friend bool operator==(const BasicQPoly&, const BasicQPoly&) = default;

    /// "1 + q + 2q^2 - q^5"; "0" for the zero polynomial.
    [[nodiscard]] std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const Int& x = c_[i];
            if (x == 0) continue;
            Int mag = x < 0 ? Int(-x) : x;
            if (first) {
                if (x < 0) os << '-';
            } else {
                os << (x < 0 ? " - " : " + ");
            }
            first = false;
            if (i == 0 || mag != 1) os << mag;
            if (i >= 1) os << 'q';
            if (i >= 2) os << '^' << i;
        }
        return os.str();
    }

    /// JSON integer array, index = exponent. Exact for any coefficient size.
    [[nodiscard]] std::string to_json_text() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ',';
            os << c_[i];
        }
        os << ']';
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const BasicQPoly& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

using QPoly = BasicQPoly<BigInt>;

/// [a choose b]_q by the q-Pascal rule [a,b] = [a-1,b-1] + q^b [a-1,b].
/// Results are memoised in a process-wide table guarded by a mutex.
inline QPoly gaussian(std::int64_t a, std::int64_t b) {
    if (b < 0 || a < 0 || b > a) return {};
    if (b == 0 || b == a) return QPoly::constant(1);
    b = std::min(b, a - b);

    static std::mutex mu;
    static std::map<std::pair<std::int64_t, std::int64_t>, QPoly> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({a, b});
        if (it != memo.end()) return it->second;
    }
    // Row by row up to a, keeping only columns 0..b.
    std::vector<QPoly> row(static_cast<std::size_t>(b) + 1);
    row[0] = QPoly::constant(1);
    for (std::int64_t i = 1; i <= a; ++i) {
        for (std::int64_t j = std::min(i, b); j >= 1; --j) {
            QPoly next = row[static_cast<std::size_t>(j - 1)];
            next.add_shifted(row[static_cast<std::size_t>(j)], static_cast<std::size_t>(j));
            row[static_cast<std::size_t>(j)] = std::move(next);
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(std::make_pair(a, b), row[static_cast<std::size_t>(b)]).first->second;
}

/// Ordinary binomial coefficient, exact.
inline BigInt binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || n < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigInt out = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        out *= (n - r + i);
        out /= i;
    }
    return out;
}

/// Weakly rises then weakly falls over the window between the lowest and
/// highest non-zero coefficients. Zeros inside the window count as values.
template <typename Int>
bool is_unimodal(const BasicQPoly<Int>& p) {
    if (p.is_zero()) return true;
    const auto& c = p.coefficients();
    auto i = static_cast<std::size_t>(p.low_degree());
    const std::size_t end = c.size();
    while (i + 1 < end && c[i] <= c[i + 1]) ++i;
    while (i + 1 < end && c[i] >= c[i + 1]) ++i;
    return i + 1 == end;
}

/// c_i == c_(twice_center - i) for every i.
template <typename Int>
bool is_symmetric(const BasicQPoly<Int>& p, std::int64_t twice_center) {
    const std::int64_t top = std::max<std::int64_t>(p.degree(), twice_center);
    for (std::int64_t i = 0; i <= top; ++i) {
        if (p.coeff(i) != p.coeff(twice_center - i)) return false;
    }
    return true;
}

/// Entry l is the sum of the coefficients of q^(l + jm) over all j.
template <typename Int>
std::vector<Int> sieved_sums(const BasicQPoly<Int>& p, std::int64_t m) {
    if (m < 1) throw domain_error("sieved_sums: modulus must be positive");
    std::vector<Int> out(static_cast<std::size_t>(m), Int(0));
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) out[i % static_cast<std::size_t>(m)] += c[i];
    return out;
}

/// v_i = a_i + a_(i-m) + a_(i-2m) + ... for i = 0..length-1.
template <typename Int>
std::vector<Int> strided_prefix_sums(const BasicQPoly<Int>& p, std::int64_t m, std::int64_t length) {
    if (m < 1) throw domain_error("strided_prefix_sums: stride must be positive");
    if (length < p.degree() + 1) throw domain_error("strided_prefix_sums: length must cover the degree");
    std::vector<Int> v(static_cast<std::size_t>(length), Int(0));
    for (std::int64_t i = 0; i < length; ++i) {
        v[static_cast<std::size_t>(i)] = p.coeff(i);
        if (i >= m) v[static_cast<std::size_t>(i)] += v[static_cast<std::size_t>(i - m)];
    }
    return v;
}

/// Weakly increasing sequence test.
template <typename Int>
bool is_weakly_increasing(const std::vector<Int>& v) {
    return std::is_sorted(v.begin(), v.end());
}

/// The d-th cyclotomic polynomial, from q^d - 1 = ∏_{e | d} Φ_e.
inline QPoly cyclotomic(std::int64_t d) {
    if (d < 1) throw domain_error("cyclotomic: order must be positive");
    static std::mutex mu;
    static std::map<std::int64_t, QPoly> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(d);
        if (it != memo.end()) return it->second;
    }
    QPoly acc = QPoly::monomial(static_cast<std::size_t>(d)) - QPoly::constant(1);
    for (std::int64_t e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto [quot, rem] = divmod(acc, cyclotomic(e));
        if (!rem.is_zero()) throw std::logic_error("cyclotomic: inexact division");
        acc = std::move(quot);
    }
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(d, acc).first->second;
}

/// p mod Φ_d. Zero exactly when p vanishes at every primitive d-th root of unity.
inline QPoly reduce_mod_cyclotomic(const QPoly& p, std::int64_t d) { return divmod(p, cyclotomic(d)).second; }

}  // namespace kyoung
