// report.hpp
// Table regeneration (CSV / JSON / text) and the audit of recomputed values
// against the published tables.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twinprime/counting.hpp"
#include "twinprime/estimators.hpp"
#include "twinprime/paper_fixture.hpp"
#include "twinprime/sieve.hpp"
#include "twinprime/table.hpp"

namespace twinprime {

enum class OutputFormat { csv, json, text };

inline OutputFormat parse_format(std::string_view s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    if (s == "text") return OutputFormat::text;
    throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected csv, json or text)");
}

inline const char* format_extension(OutputFormat f) {
    switch (f) {
        case OutputFormat::csv: return ".csv";
        case OutputFormat::json: return ".json";
        case OutputFormat::text: return ".txt";
    }
    return "";
}

// Environment variable naming the default output directory.
inline constexpr const char* out_dir_env = "TWINPRIME_OUT_DIR";

struct RunConfig {
    std::uint64_t limit = 1'000'000;
    std::vector<std::uint64_t> checkpoints;  // empty: the table's published checkpoints
    std::optional<double> h_c;
    std::uint64_t euler_pmax = 1'000'000;
    OutputFormat format = OutputFormat::csv;
    std::string out_path;  // empty: $TWINPRIME_OUT_DIR/<table>.<ext>, else stdout
    unsigned threads = 1;

    EstimatorConfig estimator() const {
        EstimatorConfig cfg;
        if (h_c) cfg.h_c = *h_c;
        cfg.euler_pmax = euler_pmax;
        cfg.validate();
        return cfg;
    }

    SieveOptions sieve_options() const {
        SieveOptions o;
        o.threads = threads;
        return o;
    }

    // Checkpoints for a table, validated against limit.
    std::vector<std::uint64_t> resolve_checkpoints(std::span<const std::uint64_t> defaults) const {
        std::vector<std::uint64_t> xs = checkpoints.empty()
                                            ? std::vector<std::uint64_t>(defaults.begin(), defaults.end())
                                            : checkpoints;
        for (const auto x : xs)
            if (x > limit)
                throw std::invalid_argument("checkpoint " + std::to_string(x) + " exceeds --limit " +
                                            std::to_string(limit));
        return xs;
    }
};

// Explicit path wins; otherwise the env directory; otherwise empty (stdout).
inline std::string resolve_output_path(const RunConfig& cfg, std::string_view table_name) {
    if (!cfg.out_path.empty()) return cfg.out_path;
    if (const char* dir = std::getenv(out_dir_env); dir && *dir)
        return (std::filesystem::path(dir) / (std::string(table_name) + format_extension(cfg.format))).string();
    return {};
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

// ---- JSON mapping (field names follow the row structs) ----

inline void to_json(nlohmann::json& j, const CountCheckpoint& r) {
    j = {{"x", r.x}, {"pi_x", r.pi_x}, {"pi2_x", r.pi2_x}, {"pi_pi_x", r.pi_pi_x}, {"ratio", r.ratio}};
}
inline void from_json(const nlohmann::json& j, CountCheckpoint& r) {
    j.at("x").get_to(r.x);
    j.at("pi_x").get_to(r.pi_x);
    j.at("pi2_x").get_to(r.pi2_x);
    j.at("pi_pi_x").get_to(r.pi_pi_x);
    j.at("ratio").get_to(r.ratio);
}

inline void to_json(nlohmann::json& j, const SandwichCheck& r) {
    j = {{"x", r.row.x},           {"a_bound", r.row.a_bound}, {"pi2_x", r.row.pi2_x},
         {"b_bound", r.row.b_bound}, {"pi_pi_x", r.pi_pi_x},     {"holds", r.holds},
         {"pi2_inside", r.pi2_inside}};
}
inline void from_json(const nlohmann::json& j, SandwichCheck& r) {
    j.at("x").get_to(r.row.x);
    j.at("a_bound").get_to(r.row.a_bound);
    j.at("pi2_x").get_to(r.row.pi2_x);
    j.at("b_bound").get_to(r.row.b_bound);
    j.at("pi_pi_x").get_to(r.pi_pi_x);
    j.at("holds").get_to(r.holds);
    j.at("pi2_inside").get_to(r.pi2_inside);
}

inline void to_json(nlohmann::json& j, const EstimateRow& r) {
    j = {{"x", r.x},           {"eta_p", r.eta_p},       {"eta_pp", r.eta_pp},       {"h", r.h},
         {"pi2_x", r.pi2_x},   {"pi2_star", r.pi2_star}, {"abs_delta", r.abs_delta}, {"rel_error", r.rel_error}};
}
inline void from_json(const nlohmann::json& j, EstimateRow& r) {
    j.at("x").get_to(r.x);
    j.at("eta_p").get_to(r.eta_p);
    j.at("eta_pp").get_to(r.eta_pp);
    j.at("h").get_to(r.h);
    j.at("pi2_x").get_to(r.pi2_x);
    j.at("pi2_star").get_to(r.pi2_star);
    j.at("abs_delta").get_to(r.abs_delta);
    j.at("rel_error").get_to(r.rel_error);
}

template <class Row>
struct TableResult {
    std::vector<Row> rows;
    TableDocument doc;
};

template <class Row>
std::string render(const TableResult<Row>& t, OutputFormat f) {
    switch (f) {
        case OutputFormat::csv: return to_csv(t.doc);
        case OutputFormat::text: return to_text(t.doc);
        case OutputFormat::json: {
            nlohmann::json j = {{"table", t.doc.name}, {"rows", t.rows}};
            return j.dump(2) + "\n";
        }
    }
    return {};
}

inline std::string render_int(double v) { return std::to_string(round_half_away(v)); }

// ---- Table 1: x, pi(x), pi_2(x), pi(pi(x)), ratio ----

inline TableResult<CountCheckpoint> emit_table1(const PrimeSieve& sieve, std::span<const std::uint64_t> xs) {
    TableResult<CountCheckpoint> t;
    t.rows = checkpoint_rows(sieve, xs);
    t.doc.name = "table1";
    t.doc.columns = {"x", "pi_x", "pi2_x", "pi_pi_x", "ratio"};
    for (const auto& r : t.rows)
        t.doc.rows.push_back({std::to_string(r.x), std::to_string(r.pi_x), std::to_string(r.pi2_x),
                              std::to_string(r.pi_pi_x), format_fixed(r.ratio, 3)});
    return t;
}

// ---- Table 2: x, A, pi_2(x), B (A and B as nearest integers) ----

inline TableResult<SandwichCheck> emit_table2(const PrimeSieve& sieve, std::span<const std::uint64_t> xs) {
    TableResult<SandwichCheck> t;
    t.doc.name = "table2";
    t.doc.columns = {"x", "a_bound", "pi2_x", "b_bound", "pi2_inside"};
    for (const auto x : xs) {
        if (x < 5 || x > sieve.limit())
            throw std::invalid_argument("table2: x=" + std::to_string(x) + " outside [5, limit]");
        t.rows.push_back(sandwich_check(sieve, x));
        const auto& r = t.rows.back();
        t.doc.rows.push_back({std::to_string(x), render_int(r.row.a_bound), std::to_string(r.row.pi2_x),
                              render_int(r.row.b_bound), r.pi2_inside ? "true" : "false"});
    }
    return t;
}

// ---- Table 3: x, h, pi_2(x), pi_2*(x), |delta|, delta/pi_2(x) ----

inline TableResult<EstimateRow> emit_table3(const PrimeSieve& sieve, std::span<const std::uint64_t> xs,
                                            const EstimatorConfig& cfg) {
    TableResult<EstimateRow> t;
    t.doc.name = "table3";
    t.doc.columns = {"x", "h", "pi2_x", "pi2_star", "abs_delta", "rel_error"};
    for (const auto x : xs) {
        if (x < 5 || x > sieve.limit())
            throw std::invalid_argument("table3: x=" + std::to_string(x) + " outside [5, limit]");
    }
    t.rows = estimate_rows(sieve, xs, cfg);
    for (const auto& r : t.rows)
        t.doc.rows.push_back({std::to_string(r.x), format_fixed(r.h, 6), std::to_string(r.pi2_x),
                              std::to_string(r.pi2_star), std::to_string(r.abs_delta), format_fixed(r.rel_error, 4)});
    return t;
}

// ---- Audit ----

enum class CellStatus { match, mismatch, formatting_only };

inline const char* to_string(CellStatus s) {
    switch (s) {
        case CellStatus::match: return "match";
        case CellStatus::mismatch: return "mismatch";
        case CellStatus::formatting_only: return "formatting-only";
    }
    return "";
}

struct PaperCell {
    int table_id = 0;
    std::uint64_t x = 0;
    std::string column;
    double paper_value = 0.0;
    double computed_value = 0.0;
    CellStatus status = CellStatus::match;
};

// One published quantity printed with different values in different tables.
struct CrossTableNote {
    std::uint64_t x = 0;
    std::string column;
    std::map<int, double> paper_values;  // table id -> printed value
    double computed_value = 0.0;
};

struct AuditReport {
    std::vector<PaperCell> cells;
    std::vector<CrossTableNote> contradictions;

    std::size_t mismatches() const {
        std::size_t n = 0;
        for (const auto& c : cells) n += c.status != CellStatus::match;
        return n;
    }

    const PaperCell* find(int table, std::uint64_t x, std::string_view column) const {
        for (const auto& c : cells)
            if (c.table_id == table && c.x == x && c.column == column) return &c;
        return nullptr;
    }
};

inline constexpr std::uint64_t audit_min_limit = 1'000'000;

inline AuditReport audit_against_paper(const PrimeSieve& sieve, const EstimatorConfig& cfg) {
    if (sieve.limit() < audit_min_limit)
        throw std::invalid_argument("audit needs a sieve limit >= " + std::to_string(audit_min_limit));
    AuditReport rep;

    // Printed precision decides equality.
    auto add = [&](int table, std::uint64_t x, std::string column, double paper, double computed, int decimals) {
        const bool same = format_fixed(paper, decimals) == format_fixed(computed, decimals);
        rep.cells.push_back({table, x, std::move(column), paper, computed,
                             same ? CellStatus::match : CellStatus::mismatch});
    };
    auto as_d = [](std::uint64_t v) { return static_cast<double>(v); };

    for (const auto& p : paper::table1) {
        const auto r = make_checkpoint(sieve, p.x);
        add(1, p.x, "pi_x", as_d(p.pi_x), as_d(r.pi_x), 0);
        add(1, p.x, "pi2_x", as_d(p.pi2_x), as_d(r.pi2_x), 0);
        add(1, p.x, "pi_pi_x", as_d(p.pi_pi_x), as_d(r.pi_pi_x), 0);
        add(1, p.x, "ratio", p.ratio, r.ratio, 3);
    }
    for (const auto& p : paper::table2) {
        const auto r = sandwich_check(sieve, p.x);
        add(2, p.x, "a_bound", p.a_bound, as_d(round_half_away(r.row.a_bound)), 0);
        add(2, p.x, "pi2_x", as_d(p.pi2_x), as_d(r.row.pi2_x), 0);
        const double b = as_d(round_half_away(r.row.b_bound));
        if (p.b_decimal_slip) {
            const double repaired = p.b_bound * 1000.0;
            const auto status = format_fixed(repaired, 0) == format_fixed(b, 0) ? CellStatus::formatting_only
                                                                                 : CellStatus::mismatch;
            rep.cells.push_back({2, p.x, "b_bound", p.b_bound, b, status});
        } else {
            add(2, p.x, "b_bound", p.b_bound, b, 0);
        }
    }
    for (const auto& p : paper::table3) {
        const auto r = estimate_row(sieve, p.x, cfg);
        add(3, p.x, "h", p.h, r.h, 6);
        add(3, p.x, "pi2_x", as_d(p.pi2_x), as_d(r.pi2_x), 0);
        add(3, p.x, "pi2_star", as_d(p.pi2_star), as_d(r.pi2_star), 0);
        add(3, p.x, "abs_delta", as_d(p.abs_delta), as_d(r.abs_delta), 0);
        add(3, p.x, "rel_error", p.rel_error, r.rel_error, 4);
    }

    std::map<std::uint64_t, std::map<int, double>> printed_pi2;
    for (const auto& p : paper::table1) printed_pi2[p.x][1] = as_d(p.pi2_x);
    for (const auto& p : paper::table2) printed_pi2[p.x][2] = as_d(p.pi2_x);
    for (const auto& p : paper::table3) printed_pi2[p.x][3] = as_d(p.pi2_x);
    for (const auto& [x, by_table] : printed_pi2) {
        if (by_table.size() < 2) continue;
        const double first = by_table.begin()->second;
        bool differ = false;
        for (const auto& [t, v] : by_table) differ |= v != first;
        if (differ) rep.contradictions.push_back({x, "pi2_x", by_table, as_d(count_twin_pairs(sieve, x))});
    }
    return rep;
}

inline std::string render_audit(const AuditReport& rep, OutputFormat f) {
    TableDocument cells{"audit", {"table", "x", "column", "paper", "computed", "status"}, {}};
    for (const auto& c : rep.cells)
        cells.rows.push_back({std::to_string(c.table_id), std::to_string(c.x), c.column, format_fixed(c.paper_value, 6),
                              format_fixed(c.computed_value, 6), to_string(c.status)});
    auto note_values = [](const CrossTableNote& n) {
        std::string s;
        for (const auto& [t, v] : n.paper_values) {
            if (!s.empty()) s += ' ';
            s += "T" + std::to_string(t) + "=" + format_fixed(v, 0);
        }
        return s;
    };

    if (f == OutputFormat::json) {
        nlohmann::json j;
        j["fixture_version"] = std::string(paper::paper_fixture_version);
        j["cells"] = nlohmann::json::array();
        for (const auto& c : rep.cells)
            j["cells"].push_back({{"table_id", c.table_id},
                                  {"x", c.x},
                                  {"column", c.column},
                                  {"paper_value", c.paper_value},
                                  {"computed_value", c.computed_value},
                                  {"status", to_string(c.status)}});
        j["contradictions"] = nlohmann::json::array();
        for (const auto& n : rep.contradictions) {
            nlohmann::json pv;
            for (const auto& [t, v] : n.paper_values) pv[std::to_string(t)] = v;
            j["contradictions"].push_back(
                {{"x", n.x}, {"column", n.column}, {"paper_values", pv}, {"computed_value", n.computed_value}});
        }
        j["mismatches"] = rep.mismatches();
        return j.dump(2) + "\n";
    }

    TableDocument notes{"contradictions", {"x", "column", "printed", "computed"}, {}};
    for (const auto& n : rep.contradictions)
        notes.rows.push_back({std::to_string(n.x), n.column, note_values(n), format_fixed(n.computed_value, 0)});
    if (f == OutputFormat::csv) return to_csv(cells) + "\n" + to_csv(notes);
    return to_text(cells) + "\n" + to_text(notes) + "\n" + std::to_string(rep.mismatches()) + " of " +
           std::to_string(rep.cells.size()) + " cells differ from the published values\n";
}

}  // namespace twinprime
