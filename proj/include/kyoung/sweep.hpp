#pragma once

// Named checks, their default grids, and report rendering.

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kyoung/io.hpp"
#include "kyoung/verify.hpp"

namespace kyoung {

inline constexpr std::array<std::string_view, 5> check_names = {"conjecture-u", "conjecture-gen", "sieved",
                                                                 "sieved-binomial", "structure"};

enum class ReportFormat { json, csv };

inline ReportFormat parse_report_format(std::string_view s) {
    if (s == "json") return ReportFormat::json;
    if (s == "csv") return ReportFormat::csv;
    throw domain_error("unknown report format '" + std::string(s) + "' (expected json or csv)");
}

/// One verification run. Unset ranges take the check's defaults.
struct SweepConfig {
    std::string check;
    std::optional<IntSet> m, n, k, a, b;
    std::optional<std::int64_t> n_offset_max;
    std::optional<std::int32_t> degree_max;
    ReportFormat format = ReportFormat::json;
    std::string out;
    bool timing = false;

    /// {"check":..., "m":..., "n":..., "k":..., "a":..., "b":...,
    ///  "n_offset_max":..., "degree_max":..., "format":..., "out":..., "timing":...}
    static SweepConfig from_json(const json& j) {
        if (!j.is_object() || !j.contains("check") || !j.at("check").is_string()) {
            throw domain_error("sweep config entries must be objects with a \"check\" string");
        }
        static constexpr std::array<std::string_view, 11> known = {
            "check", "m", "n", "k", "a", "b", "n_offset_max", "degree_max", "format", "out", "timing"};
        for (const auto& [key, value] : j.items()) {
            if (std::find(known.begin(), known.end(), key) == known.end()) {
                throw domain_error("unknown sweep config key '" + key + "'");
            }
        }
        SweepConfig c;
        c.check = j.at("check").get<std::string>();
        auto range = [&](const char* key, std::optional<IntSet>& dst) {
            if (j.contains(key)) dst = IntSet::from_json(j.at(key));
        };
        range("m", c.m);
        range("n", c.n);
        range("k", c.k);
        range("a", c.a);
        range("b", c.b);
        if (j.contains("n_offset_max")) c.n_offset_max = j.at("n_offset_max").get<std::int64_t>();
        if (j.contains("degree_max")) c.degree_max = j.at("degree_max").get<std::int32_t>();
        if (j.contains("format")) c.format = parse_report_format(j.at("format").get<std::string>());
        if (j.contains("out")) c.out = j.at("out").get<std::string>();
        if (j.contains("timing")) c.timing = j.at("timing").get<bool>();
        c.validate();
        return c;
    }

    void validate() const {
        if (std::find(check_names.begin(), check_names.end(), check) == check_names.end()) {
            throw domain_error("unknown check '" + check + "'");
        }
        for (const auto* r : {&m, &n, &k, &a, &b}) {
            if (*r && (*r)->empty()) throw domain_error("parameter ranges must be non-empty");
        }
        if (degree_max && *degree_max < 0) throw domain_error("degree_max must be non-negative");
    }
};

namespace detail {

inline std::int32_t bound_of(const std::optional<IntSet>& s, std::int32_t fallback) {
    return s ? static_cast<std::int32_t>(s->max()) : fallback;
}

}  // namespace detail

/// Runs the configured check. The default grids are arbitrary desk-scale
/// choices.
inline std::vector<VerificationReport> run_sweep(const SweepConfig& c) {
    c.validate();
    const IntSet none;
    if (c.check == "conjecture-u") {
        return {verify_conjecture_u(c.m.value_or(IntSet{2, 3, 5, 7}), c.k.value_or(IntSet::range(1, 25)),
                                    c.n.value_or(IntSet::range(1, 30)), c.n_offset_max.value_or(5), c.timing)};
    }
    if (c.check == "conjecture-gen") {
        const IntSet ms = c.m.value_or(IntSet::range(2, 12));
        const IntSet ns = c.n.value_or(IntSet::range(1, 25));
        if (c.a && c.b && c.a->values().size() == 1 && c.b->values().size() == 1 && ms.values().size() == 1 &&
            ns.values().size() == 1) {
            return {verify_conjecture_gen(ms.min(), c.a->min(), c.b->min(), ns.min(), c.timing)};
        }
        return {verify_conjecture_gen(ms, c.a.value_or(none), c.b.value_or(IntSet::range(1, 20)), ns, c.timing)};
    }
    if (c.check == "sieved") {
        const IntSet ms = c.m.value_or(IntSet::range(2, 12));
        if (c.a && c.b && c.a->values().size() == 1 && c.b->values().size() == 1 && ms.values().size() == 1) {
            return {verify_sieved(ms.min(), c.a->min(), c.b->min(), c.timing)};
        }
        return {verify_sieved_grid(ms, c.b.value_or(IntSet::range(1, 20)), c.a.value_or(none), c.timing)};
    }
    if (c.check == "sieved-binomial") {
        return {verify_sieved_binomial(c.m.value_or(IntSet{2, 3, 5, 7}), c.k.value_or(IntSet::range(1, 30)), c.timing)};
    }
    StructureBounds b;
    b.m_max = detail::bound_of(c.m, b.m_max);
    b.n_max = detail::bound_of(c.n, b.n_max);
    b.k_max = detail::bound_of(c.k, b.k_max);
    b.degree_max = c.degree_max.value_or(b.degree_max);
    if (b.m_max < 1 || b.n_max < 1 || b.k_max < 1) throw domain_error("structure: bounds must be positive");
    return verify_structure(b, c.timing);
}

inline bool all_ok(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.ok(); });
}

/// A single report renders as an object, several as an array. CSV has one
/// summary row per report; counterexamples are only in the JSON form.
inline std::string render_reports(const std::vector<VerificationReport>& reports, ReportFormat format) {
    if (format == ReportFormat::csv) {
        std::ostringstream os;
        os << "check,kind,grid,pass,fail,skip,elapsed_ms\n";
        for (const auto& r : reports) {
            os << r.check << ',' << to_string(r.kind) << ',' << r.grid() << ',' << r.pass << ',' << r.fail << ','
               << r.skip << ',' << r.elapsed_ms << '\n';
        }
        return os.str();
    }
    if (reports.size() == 1) return reports.front().to_json().dump(2) + "\n";
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    return arr.dump(2) + "\n";
}

}  // namespace kyoung
