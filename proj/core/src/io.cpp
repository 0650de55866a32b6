#include "cubereduce/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace cubereduce {

namespace {

std::string trim(std::string_view text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  const auto end = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(begin, end - begin + 1));
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(trim(std::string_view(line).substr(start)));
      break;
    }
    cells.push_back(trim(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

std::ifstream open_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open \"" + path.string() + "\"");
  return in;
}

}  // namespace

DimensionSchema parse_schema(std::istream& in) {
  std::vector<Dimension> dimensions;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto at = [&](const std::string& what) {
      return "schema line " + std::to_string(line_number) + ": " + what;
    };
    const std::size_t open = stripped.find('{');
    if (open == std::string::npos || stripped.back() != '}') {
      throw DataError(at("expected NAME{ modality, modality, ... }"));
    }
    Dimension dim;
    dim.name = trim(std::string_view(stripped).substr(0, open));
    if (dim.name.empty()) throw DataError(at("missing dimension name"));
    const std::string body = stripped.substr(open + 1, stripped.size() - open - 2);
    for (const auto& cell : split_csv(body)) {
      if (cell.empty()) throw DataError(at("empty modality in dimension \"" + dim.name + "\""));
      dim.modalities.push_back(cell);
    }
    dimensions.push_back(std::move(dim));
  }
  if (dimensions.empty()) throw DataError("schema document declares no dimensions");
  DimensionSchema schema(std::move(dimensions));
  ensure_valid(schema);
  return schema;
}

DimensionSchema load_schema(const std::filesystem::path& path) {
  auto in = open_file(path);
  return parse_schema(in);
}

std::vector<FactRecord> parse_facts_table(std::istream& in, const DimensionSchema& schema) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("facts table is empty (missing header row)");
  const std::vector<std::string> header = split_csv(line);
  if (static_cast<int>(header.size()) != schema.dimension_count()) {
    throw DataError("header has " + std::to_string(header.size()) + " columns, schema has " +
                    std::to_string(schema.dimension_count()) + " dimensions");
  }
  for (int j = 0; j < schema.dimension_count(); ++j) {
    if (header[j] != schema.dimension(j).name) {
      throw DataError("unknown header \"" + header[j] + "\" in column " + std::to_string(j + 1) +
                      " (expected \"" + schema.dimension(j).name + "\")");
    }
  }
  std::vector<FactRecord> facts;
  int row_number = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ++row_number;
    FactRecord fact{split_csv(line)};
    if (static_cast<int>(fact.values.size()) != schema.dimension_count()) {
      throw DataError("row " + std::to_string(row_number) + " has " +
                      std::to_string(fact.values.size()) + " cells, expected " +
                      std::to_string(schema.dimension_count()));
    }
    for (int j = 0; j < schema.dimension_count(); ++j) {
      if (schema.find_modality(j, fact.values[j]) < 0) {
        throw DataError("row " + std::to_string(row_number) + ", column \"" +
                        schema.dimension(j).name + "\": unknown modality \"" + fact.values[j] +
                        "\"");
      }
    }
    facts.push_back(std::move(fact));
  }
  return facts;
}

std::vector<FactRecord> load_facts(const std::filesystem::path& path,
                                   const DimensionSchema& schema) {
  auto in = open_file(path);
  return parse_facts_table(in, schema);
}

ReferenceProfile parse_reference(std::istream& in, const DimensionSchema& schema) {
  std::vector<FactRecord> rows = parse_facts_table(in, schema);
  if (rows.size() != 1) {
    throw DataError("reference document must contain exactly one data row, got " +
                    std::to_string(rows.size()));
  }
  return build_reference(rows.front(), schema);
}

ReferenceProfile load_reference(const std::filesystem::path& path, const DimensionSchema& schema) {
  auto in = open_file(path);
  return parse_reference(in, schema);
}

std::vector<double> parse_targets(std::istream& in) {
  std::vector<double> targets;
  std::string token;
  while (in >> token) {
    double value = 0.0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
      throw DataError("bad target value \"" + token + "\"");
    }
    targets.push_back(value);
  }
  if (targets.empty()) throw DataError("targets document contains no values");
  return targets;
}

std::vector<double> load_targets(const std::filesystem::path& path) {
  auto in = open_file(path);
  return parse_targets(in);
}

DisjunctiveTable load_cdt(const std::filesystem::path& path) {
  auto in = open_file(path);
  return read_cdt(in);
}

void save_cdt(const DisjunctiveTable& cdt, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write \"" + path.string() + "\"");
  write_cdt(cdt, out);
}

}  // namespace cubereduce
