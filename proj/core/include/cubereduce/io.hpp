#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cubereduce/coding.hpp"
#include "cubereduce/model.hpp"

namespace cubereduce {

/// Schema document grammar, one dimension per line, file order authoritative:
///
///   # comment
///   TRAVELLER{ Foreign, Citizen }
///   BORDER CONTROL{ Aerial, Earth, Maritime }
///
/// Everything before '{' (trimmed) is the dimension name; inside the braces
/// a comma-separated ordered modality list. Blank lines and '#' comments are
/// ignored. Syntax errors carry the line number; the parsed schema is then
/// validated against the core invariants.
DimensionSchema parse_schema(std::istream& in);
DimensionSchema load_schema(const std::filesystem::path& path);

/// Facts table: comma-delimited text, no quoting, cells trimmed of outer
/// whitespace. The header row must name all schema dimensions in schema
/// order. Cells are matched case-sensitively against the modality
/// vocabulary; errors name the offending row and column.
std::vector<FactRecord> parse_facts_table(std::istream& in, const DimensionSchema& schema);
std::vector<FactRecord> load_facts(const std::filesystem::path& path, const DimensionSchema& schema);

/// Same format as the facts table with exactly one data row.
ReferenceProfile parse_reference(std::istream& in, const DimensionSchema& schema);
ReferenceProfile load_reference(const std::filesystem::path& path, const DimensionSchema& schema);

/// Whitespace-separated reals (calibration targets).
std::vector<double> parse_targets(std::istream& in);
std::vector<double> load_targets(const std::filesystem::path& path);

DisjunctiveTable load_cdt(const std::filesystem::path& path);
void save_cdt(const DisjunctiveTable& cdt, const std::filesystem::path& path);

}  // namespace cubereduce
