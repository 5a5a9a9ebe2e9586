// table.hpp
// Rendered tables: header + string cells, with CSV and aligned-text writers
// and a CSV reader for round-tripping emitted files.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twinprime {

struct TableDocument {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    bool operator==(const TableDocument&) const = default;
};

// Fixed-point with a '.' decimal point regardless of locale.
inline std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    std::string s(buf);
    std::replace(s.begin(), s.end(), ',', '.');
    return s;
}

inline std::string to_csv(const TableDocument& t) {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    line(t.columns);
    for (const auto& r : t.rows) line(r);
    return out;
}

// Cells never contain commas or quotes, so no quoting is needed.
inline TableDocument parse_csv(std::string_view text, std::string name = {}) {
    TableDocument t;
    t.name = std::move(name);
    auto split = [](std::string_view l) {
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const auto comma = l.find(',', start);
            cells.emplace_back(l.substr(start, comma - start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return cells;
    };
    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        auto l = text.substr(pos, nl - pos);
        pos = nl + 1;
        if (l.empty()) continue;
        if (header) {
            t.columns = split(l);
            header = false;
        } else {
            auto cells = split(l);
            if (cells.size() != t.columns.size())
                throw std::runtime_error("csv: row has " + std::to_string(cells.size()) + " cells, header has " +
                                         std::to_string(t.columns.size()));
            t.rows.push_back(std::move(cells));
        }
    }
    return t;
}

inline std::string to_text(const TableDocument& t) {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        width[c] = t.columns[c].size();
        for (const auto& r : t.rows) width[c] = std::max(width[c], r[c].size());
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) os << "  ";
            os << std::string(width[c] - cells[c].size(), ' ') << cells[c];
        }
        os << '\n';
    };
    if (!t.name.empty()) os << t.name << '\n';
    line(t.columns);
    for (const auto& r : t.rows) line(r);
    return os.str();
}

}  // namespace twinprime
