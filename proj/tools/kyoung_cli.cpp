// kyoung: command-line front end.
//
// Exit codes: 0 all checks pass, 1 a counterexample was found, 2 usage or
// validation error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kyoung/kyoung.hpp"

namespace {

using namespace kyoung;

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_usage = 2;

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
    } else {
        write_text_file(out, text);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw domain_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::optional<IntSet> optional_set(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return IntSet::parse(text);
}

int run_configs(const std::vector<SweepConfig>& configs) {
    bool ok = true;
    for (const auto& c : configs) {
        const auto reports = run_sweep(c);
        ok = ok && all_ok(reports);
        emit(render_reports(reports, c.format), c.out);
    }
    return ok ? exit_ok : exit_counterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-Young lattice toolkit"};
    app.require_subcommand(1);

    std::string parts;
    std::int32_t k = 0;
    std::int32_t m = 0;
    std::int32_t n = 0;
    std::string out;

    auto* kconj = app.add_subcommand("kconj", "k-conjugate of a k-bounded partition");
    kconj->add_option("parts", parts, "comma-separated parts")->required();
    kconj->add_option("--k", k, "bound")->required();

    auto* kskew = app.add_subcommand("kskew", "k-skew diagram of a k-bounded partition");
    kskew->add_option("parts", parts, "comma-separated parts")->required();
    kskew->add_option("--k", k, "bound")->required();

    std::string dir = "up";
    auto* cov = app.add_subcommand("covers", "covers in the k-Young lattice");
    cov->add_option("parts", parts, "comma-separated parts")->required();
    cov->add_option("--k", k, "bound")->required();
    cov->add_option("--dir", dir, "up or down")->check(CLI::IsMember({"up", "down"}));

    bool as_dot = false;
    bool as_json = false;
    bool as_csv = false;
    auto* ideal = app.add_subcommand("ideal", "the ideal L^k(m,n) below the rectangle (m^n)");
    ideal->add_option("--m", m, "rectangle width")->required();
    ideal->add_option("--n", n, "rectangle height")->required();
    ideal->add_option("--k", k, "bound")->required();
    auto* fmt_dot = ideal->add_flag("--dot", as_dot, "Graphviz output");
    auto* fmt_json = ideal->add_flag("--json", as_json, "JSON output (default)");
    auto* fmt_csv = ideal->add_flag("--csv", as_csv, "rank vector as CSV");
    fmt_dot->excludes(fmt_json)->excludes(fmt_csv);
    fmt_json->excludes(fmt_csv);
    ideal->add_option("--out", out, "output file");

    bool pretty = false;
    auto* rankgen = app.add_subcommand("rankgen", "rank-generating function of L^k(m,n)");
    rankgen->add_option("--m", m, "rectangle width")->required();
    rankgen->add_option("--n", n, "rectangle height")->required();
    rankgen->add_option("--k", k, "bound")->required();
    rankgen->add_flag("--pretty", pretty, "print as a polynomial in q");

    std::string check;
    std::string rm, rn, rk, ra, rb;
    std::optional<std::int64_t> n_offset_max;
    std::optional<std::int32_t> degree_max;
    std::string format = "json";
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->add_option("check", check, "check name")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>(check_names.begin(), check_names.end())));
    verify->add_option("--m", rm, "m values: N, LO..HI or a,b,c");
    verify->add_option("--n", rn, "n values");
    verify->add_option("--k", rk, "k values");
    verify->add_option("--a", ra, "a values");
    verify->add_option("--b", rb, "b values");
    verify->add_option("--n-offset-max", n_offset_max, "cap n at k + this (conjecture-u)");
    verify->add_option("--degree-max", degree_max, "partition degree bound (structure)");
    verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", out, "output file");
    verify->add_flag("--timing", timing, "record wall time in elapsed_ms");

    std::string config_path;
    auto* sweep = app.add_subcommand("sweep", "run the checks listed in a JSON config");
    sweep->add_option("--config", config_path, "config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*kconj) {
            emit(to_json(k_conjugate(parse_partition(parts), k)).dump() + "\n", "");
        } else if (*kskew) {
            emit(to_json(k_skew(parse_partition(parts), k)).dump() + "\n", "");
        } else if (*cov) {
            const auto d = dir == "up" ? Direction::up : Direction::down;
            emit(to_json(covers(parse_partition(parts), k, d)).dump() + "\n", "");
        } else if (*ideal) {
            const IdealSpec spec(m, n, k);
            if (as_csv) {
                emit(to_csv(rank_vector(enumerate(spec), spec.top_rank())), out);
            } else {
                const HasseDiagram g = build_ideal(rectangle(m, n), k);
                emit(as_dot ? to_dot(g) : to_json(g).dump() + "\n", out);
            }
        } else if (*rankgen) {
            const QPoly p = rank_gen_Lk(m, n, k);
            emit((pretty ? p.to_string() : to_json(p).dump()) + "\n", "");
        } else if (*verify) {
            SweepConfig c;
            c.check = check;
            c.m = optional_set(rm);
            c.n = optional_set(rn);
            c.k = optional_set(rk);
            c.a = optional_set(ra);
            c.b = optional_set(rb);
            c.n_offset_max = n_offset_max;
            c.degree_max = degree_max;
            c.format = parse_report_format(format);
            c.out = out;
            c.timing = timing;
            return run_configs({c});
        } else if (*sweep) {
            const json j = json::parse(read_file(config_path));
            std::vector<SweepConfig> configs;
            if (j.is_array()) {
                for (const auto& e : j) configs.push_back(SweepConfig::from_json(e));
            } else {
                configs.push_back(SweepConfig::from_json(j));
            }
            return run_configs(configs);
        }
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}
