#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace decarb {

struct Column {
    std::string name;
    std::string unit;  // printed as "name [unit]" in the header row
};

// A cell is numeric or a textual flag (e.g. "infeasible"); numeric cells must
// be finite when emitted.
using Cell = std::variant<double, std::string>;

struct ResultTable {
    std::string name;  // file stem
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> footer;  // emitted as '# ...' comment lines
};

// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

// FNV-1a 64-bit, used for config provenance hashes.
std::uint64_t fnv1a64(std::string_view text);

// Comma-separated output: one header row carrying units, numeric cells in
// shortest round-trip form, footer as '#'-prefixed lines.  Throws
// std::invalid_argument on a non-finite numeric cell or a row of the wrong
// width.
void emit_csv(const ResultTable& table, std::ostream& out);

// emit_csv to a file; I/O errors carry the path.
void write_csv(const ResultTable& table, const std::filesystem::path& path);

}  // namespace decarb
