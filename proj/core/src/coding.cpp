#include "cubereduce/coding.hpp"

#include <json.hpp>

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace cubereduce {

using ordered_json = nlohmann::ordered_json;

CondensedTable::CondensedTable(DimensionSchema schema, std::vector<std::uint8_t> cells, int rows)
    : schema_(std::move(schema)), cells_(std::move(cells)), rows_(rows) {}

std::span<const std::uint8_t> CondensedTable::row(int r) const {
  const int K = schema_.total_modalities();
  return {cells_.data() + static_cast<std::size_t>(r) * K, static_cast<std::size_t>(K)};
}

std::span<const std::uint8_t> CondensedTable::block(int r, int dim) const {
  const int K = schema_.total_modalities();
  return {cells_.data() + static_cast<std::size_t>(r) * K + schema_.column_offset(dim),
          static_cast<std::size_t>(schema_.modality_count(dim))};
}

DisjunctiveTable::DisjunctiveTable(DimensionSchema schema, std::vector<std::uint8_t> matrix,
                                   int rows, std::vector<std::uint8_t> reference_row)
    : schema_(std::move(schema)),
      matrix_(std::move(matrix)),
      reference_(std::move(reference_row)),
      rows_(rows) {
  const int K = schema_.total_modalities();
  if (rows_ <= 0) throw DataError("empty sample: a disjunctive table needs at least one fact");
  if (static_cast<int>(matrix_.size()) != rows_ * K) {
    throw DataError("matrix size does not match n x K");
  }
  if (static_cast<int>(reference_.size()) != K) {
    throw DataError("reference row has " + std::to_string(reference_.size()) + " columns, expected " +
                    std::to_string(K));
  }
  occurrence_.assign(K, 0);
  for (int i = 0; i < rows_; ++i) {
    for (int c = 0; c < K; ++c) occurrence_[c] += at(i, c);
  }
  for (int c = 0; c < K; ++c) {
    if (occurrence_[c] == 0) zero_columns_.push_back(c);
  }
}

std::span<const std::uint8_t> DisjunctiveTable::row(int r) const {
  const int K = column_count();
  return {matrix_.data() + static_cast<std::size_t>(r) * K, static_cast<std::size_t>(K)};
}

namespace {

std::vector<std::uint8_t> encode_rows(const std::vector<FactRecord>& facts,
                                      const DimensionSchema& schema) {
  const int K = schema.total_modalities();
  std::vector<std::uint8_t> cells(facts.size() * static_cast<std::size_t>(K), 0);
  for (std::size_t i = 0; i < facts.size(); ++i) {
    std::vector<int> indices = resolve_fact(facts[i], schema);
    for (int j = 0; j < schema.dimension_count(); ++j) {
      cells[i * K + schema.column_offset(j) + indices[j]] = 1;
    }
  }
  return cells;
}

}  // namespace

CondensedTable build_tcc(const std::vector<FactRecord>& facts, const DimensionSchema& schema) {
  ensure_valid(schema);
  if (facts.empty()) throw DataError("empty sample: no facts to encode");
  return CondensedTable(schema, encode_rows(facts, schema), static_cast<int>(facts.size()));
}

DisjunctiveTable build_cdt(const std::vector<FactRecord>& facts, const ReferenceProfile& reference,
                           const DimensionSchema& schema) {
  CondensedTable tcc = build_tcc(facts, schema);
  std::vector<std::uint8_t> matrix;
  matrix.reserve(facts.size() * static_cast<std::size_t>(schema.total_modalities()));
  for (std::size_t i = 0; i < facts.size(); ++i) {
    auto row = tcc.row(static_cast<int>(i));
    matrix.insert(matrix.end(), row.begin(), row.end());
  }
  std::vector<std::uint8_t> ref_row = encode_rows({reference.row}, schema);
  return DisjunctiveTable(schema, std::move(matrix), static_cast<int>(facts.size()),
                          std::move(ref_row));
}

DisjunctiveTable make_cdt(DimensionSchema schema, const std::vector<std::string>& rows,
                          const std::string& reference_row) {
  ensure_valid(schema);
  const int K = schema.total_modalities();
  auto decode = [K](const std::string& bits, const char* what) {
    if (static_cast<int>(bits.size()) != K) {
      throw DataError(std::string(what) + " has " + std::to_string(bits.size()) +
                      " columns, expected " + std::to_string(K));
    }
    std::vector<std::uint8_t> out(bits.size());
    for (std::size_t c = 0; c < bits.size(); ++c) {
      if (bits[c] == '0') {
        out[c] = 0;
      } else if (bits[c] == '1') {
        out[c] = 1;
      } else {
        throw DataError(std::string(what) + " contains non-binary character '" + bits[c] + "'");
      }
    }
    return out;
  };
  std::vector<std::uint8_t> matrix;
  matrix.reserve(rows.size() * static_cast<std::size_t>(K));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto decoded = decode(rows[i], ("row " + std::to_string(i + 1)).c_str());
    matrix.insert(matrix.end(), decoded.begin(), decoded.end());
  }
  return DisjunctiveTable(std::move(schema), std::move(matrix), static_cast<int>(rows.size()),
                          decode(reference_row, "reference row"));
}

std::vector<int> occurrence_counts(const DisjunctiveTable& cdt) {
  std::vector<int> counts(cdt.column_count(), 0);
  for (int i = 0; i < cdt.sample_size(); ++i) {
    for (int c = 0; c < cdt.column_count(); ++c) counts[c] += cdt.at(i, c);
  }
  return counts;
}

CdtValidation validate_cdt(const DisjunctiveTable& cdt) {
  CdtValidation result;
  const DimensionSchema& schema = cdt.schema();
  const int p = schema.dimension_count();
  for (int i = 0; i < cdt.sample_size(); ++i) {
    int sum = 0;
    for (auto bit : cdt.row(i)) sum += bit;
    if (sum != p) {
      result.violations.push_back({CdtViolation::Kind::RowSum, i, -1,
                                   "row " + std::to_string(i + 1) + " sums to " +
                                       std::to_string(sum) + ", expected " + std::to_string(p)});
    }
  }
  std::vector<int> counts = occurrence_counts(cdt);
  for (int j = 0; j < p; ++j) {
    int block_sum = 0;
    for (int c = 0; c < schema.modality_count(j); ++c) {
      block_sum += counts[schema.column_offset(j) + c];
    }
    if (block_sum != cdt.sample_size()) {
      result.violations.push_back({CdtViolation::Kind::BlockSum, -1, j,
                                   "dimension \"" + schema.dimension(j).name + "\" occurrences sum to " +
                                       std::to_string(block_sum) + ", expected " +
                                       std::to_string(cdt.sample_size())});
    }
  }
  return result;
}

namespace {

std::string row_bits(std::span<const std::uint8_t> row) {
  std::string bits(row.size(), '0');
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c]) bits[c] = '1';
  }
  return bits;
}

}  // namespace

void write_cdt(const DisjunctiveTable& cdt, std::ostream& out) {
  ordered_json doc;
  doc["format"] = "cubereduce-cdt/1";
  doc["n"] = cdt.sample_size();
  doc["p"] = cdt.schema().dimension_count();
  doc["K"] = cdt.column_count();
  ordered_json dims = ordered_json::array();
  for (const auto& dim : cdt.schema().dimensions()) {
    dims.push_back({{"name", dim.name}, {"modalities", dim.modalities}});
  }
  doc["schema"] = std::move(dims);
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < cdt.sample_size(); ++i) rows.push_back(row_bits(cdt.row(i)));
  doc["rows"] = std::move(rows);
  doc["reference"] = row_bits(cdt.reference_row());
  doc["occurrence"] = cdt.occurrence();
  out << doc.dump(2) << '\n';
}

std::string write_cdt_string(const DisjunctiveTable& cdt) {
  std::ostringstream out;
  write_cdt(cdt, out);
  return out.str();
}

DisjunctiveTable read_cdt(std::istream& in) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed CDT document: ") + e.what());
  }
  try {
    if (doc.value("format", "") != "cubereduce-cdt/1") {
      throw DataError("unsupported CDT document format");
    }
    std::vector<Dimension> dims;
    for (const auto& entry : doc.at("schema")) {
      dims.push_back({entry.at("name").get<std::string>(),
                      entry.at("modalities").get<std::vector<std::string>>()});
    }
    DimensionSchema schema(std::move(dims));
    const int n = doc.at("n").get<int>();
    if (doc.at("p").get<int>() != schema.dimension_count()) {
      throw DataError("declared p does not match the schema");
    }
    if (doc.at("K").get<int>() != schema.total_modalities()) {
      throw DataError("declared K does not match the schema");
    }
    auto rows = doc.at("rows").get<std::vector<std::string>>();
    if (static_cast<int>(rows.size()) != n) {
      throw DataError("declared n does not match the row count");
    }
    DisjunctiveTable cdt =
        make_cdt(std::move(schema), rows, doc.at("reference").get<std::string>());
    if (doc.contains("occurrence") &&
        doc.at("occurrence").get<std::vector<int>>() != cdt.occurrence()) {
      throw DataError("stored occurrence counts do not match the matrix");
    }
    return cdt;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed CDT document: ") + e.what());
  }
}

}  // namespace cubereduce
