#pragma once

// Text formats: JSON for partitions, skew shapes, polynomials, rank vectors
// and diagrams; Graphviz DOT for diagrams; CSV for rank vectors.

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kyoung/ideal.hpp"
#include "kyoung/lattice.hpp"
#include "kyoung/partition.hpp"
#include "kyoung/qpoly.hpp"

namespace kyoung {

using json = nlohmann::ordered_json;

inline json to_json(const Partition& p) { return json(p.vec()); }

inline json to_json(const SkewShape& s) {
    json j;
    j["outer"] = to_json(s.outer());
    j["inner"] = to_json(s.inner());
    return j;
}

inline json to_json(const std::vector<Partition>& ps) {
    json arr = json::array();
    for (const auto& p : ps) arr.push_back(to_json(p));
    return arr;
}

/// Coefficients as JSON numbers. Values outside the int64 range are kept
/// exact by falling back to decimal strings.
inline json to_json(const QPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) {
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
            arr.push_back(c.convert_to<std::int64_t>());
        } else {
            arr.push_back(c.str());
        }
    }
    return arr;
}

inline json to_json(const RankVector& rv) {
    json j;
    j["coefficients"] = rv.coefficients;
    return j;
}

inline Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw domain_error("partition JSON must be an array of integers");
    std::vector<Partition::part_type> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw domain_error("partition JSON must be an array of integers");
        parts.push_back(x.get<Partition::part_type>());
    }
    return Partition(std::move(parts));
}

inline SkewShape skew_from_json(const json& j) {
    if (!j.is_object() || !j.contains("outer") || !j.contains("inner")) {
        throw domain_error("skew JSON must be {\"outer\":[...],\"inner\":[...]}");
    }
    return SkewShape(partition_from_json(j.at("outer")), partition_from_json(j.at("inner")));
}

/// "4,3,2,2,1,1" -> (4,3,2,2,1,1). The empty string is ∅; surrounding
/// brackets and whitespace are tolerated.
inline Partition parse_partition(std::string_view text) {
    std::string cleaned;
    for (char ch : text) {
        if (ch == '[' || ch == ']' || ch == '(' || ch == ')' || std::isspace(static_cast<unsigned char>(ch))) continue;
        cleaned.push_back(ch);
    }
    std::vector<Partition::part_type> parts;
    if (cleaned.empty()) return {};
    std::size_t pos = 0;
    while (pos <= cleaned.size()) {
        const auto comma = cleaned.find(',', pos);
        const auto end = comma == std::string::npos ? cleaned.size() : comma;
        Partition::part_type v = 0;
        const char* first = cleaned.data() + pos;
        const char* last = cleaned.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || first == last) {
            throw domain_error("cannot parse partition '" + std::string(text) + "'");
        }
        parts.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

/// {"k":K,"ranks":[[p,...],...],"edges":[[from,to],...]}, indices into the
/// rank-by-rank flattened vertex list.
inline json to_json(const HasseDiagram& g) {
    json j;
    j["k"] = g.k();
    json ranks = json::array();
    for (const auto& level : g.ranks()) ranks.push_back(to_json(level));
    j["ranks"] = std::move(ranks);
    json edges = json::array();
    for (const auto& [lo, hi] : g.edges()) edges.push_back(json::array({lo, hi}));
    j["edges"] = std::move(edges);
    return j;
}

inline std::string partition_label(const Partition& p) { return to_json(p).dump(); }

/// Rank-clustered DOT graph with edges pointing upward.
inline std::string to_dot(const HasseDiagram& g) {
    std::ostringstream os;
    os << "digraph kyoung {\n";
    os << "  // " << g.description() << ", k=" << g.k() << "\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box, fontname=\"Helvetica\"];\n";
    std::size_t idx = 0;
    for (std::size_t r = 0; r < g.ranks().size(); ++r) {
        os << "  subgraph rank_" << r << " {\n    rank=same;\n";
        for (const auto& p : g.ranks()[r]) {
            os << "    v" << idx++ << " [label=\"" << partition_label(p) << "\"];\n";
        }
        os << "  }\n";
    }
    for (const auto& [lo, hi] : g.edges()) os << "  v" << lo << " -> v" << hi << ";\n";
    os << "}\n";
    return os.str();
}

/// Header `i,count`, one row per rank.
inline std::string to_csv(const RankVector& rv) {
    std::ostringstream os;
    os << "i,count\n";
    for (std::size_t i = 0; i < rv.coefficients.size(); ++i) os << i << ',' << rv.coefficients[i] << '\n';
    return os.str();
}

/// Same layout for a polynomial's coefficients.
inline std::string to_csv(const QPoly& p) {
    std::ostringstream os;
    os << "i,count\n";
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) os << i << ',' << p.coefficients()[i] << '\n';
    return os.str();
}

/// Writes `text` to `path`, throwing std::runtime_error when the file cannot
/// be opened or written.
inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace kyoung
