#include "decarb/table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace decarb {

std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (result.ec != std::errc{}) {
        throw std::invalid_argument("format_double: conversion failed");
    }
    return std::string(buffer, result.ptr);
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char ch : text) {
        hash ^= ch;
        hash *= 1099511628211ULL;
    }
    return hash;
}

namespace {

// Quote per RFC 4180 when the cell contains a comma, quote or newline.
std::string csv_escape(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char ch : text) {
        if (ch == '"') {
            quoted += '"';
        }
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

std::string render_cell(const Cell& cell, const ResultTable& table) {
    if (const double* value = std::get_if<double>(&cell)) {
        if (!std::isfinite(*value)) {
            throw std::invalid_argument("emit_csv: non-finite value in table '" +
                                        table.name + "'");
        }
        return format_double(*value);
    }
    return csv_escape(std::get<std::string>(cell));
}

}  // namespace

void emit_csv(const ResultTable& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        const Column& col = table.columns[i];
        out << csv_escape(col.unit.empty() ? col.name : col.name + " [" + col.unit + "]");
    }
    out << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw std::invalid_argument("emit_csv: row width mismatch in table '" +
                                        table.name + "'");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                out << ',';
            }
            out << render_cell(row[i], table);
        }
        out << '\n';
    }
    for (const auto& line : table.footer) {
        out << "# " << line << '\n';
    }
}

void write_csv(const ResultTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    emit_csv(table, out);
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed for '" + path.string() + "'");
    }
}

}  // namespace decarb
