#pragma once
// Deterministic tabular output. CSV is byte-stable: floats go through one
// fixed 12-significant-digit format, rationals are always "num/den", and rows
// are emitted in the order they were added. The text renderer pads the same
// cells for terminals.
#include <cstdio>
#include <string>
#include <vector>
#include "exact.hpp"
#include "errors.hpp"

namespace secular {

struct OutputTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) {
        require(row.size() == header.size(), "row width must match the header");
        rows.push_back(std::move(row));
    }
};

inline std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string format_int(long long v) { return std::to_string(v); }

inline std::string to_csv(const OutputTable& t) {
    std::string out;
    auto emit_row = [&out](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    emit_row(t.header);
    for (const auto& r : t.rows) emit_row(r);
    return out;
}

inline std::string to_text(const OutputTable& t) {
    std::vector<size_t> width(t.header.size(), 0);
    for (size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
    for (const auto& r : t.rows)
        for (size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    std::string out;
    auto emit_row = [&](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out += "  ";
            out += cells[i];
            out.append(width[i] - cells[i].size(), ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    };
    emit_row(t.header);
    for (const auto& r : t.rows) emit_row(r);
    return out;
}

} // namespace secular
