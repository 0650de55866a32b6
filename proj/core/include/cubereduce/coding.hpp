#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cubereduce/model.hpp"

namespace cubereduce {

/// Condensed coding: one row per fact, one k_j-bit one-hot block per
/// dimension. Same bits as the disjunctive table, kept in block-addressable
/// form.
class CondensedTable {
 public:
  CondensedTable(DimensionSchema schema, std::vector<std::uint8_t> cells, int rows);

  int row_count() const { return rows_; }
  const DimensionSchema& schema() const { return schema_; }

  std::span<const std::uint8_t> row(int r) const;
  /// The k_j one-hot bits of dimension `dim` in row `r`.
  std::span<const std::uint8_t> block(int r, int dim) const;

 private:
  DimensionSchema schema_;
  std::vector<std::uint8_t> cells_;  // row-major, n x K
  int rows_ = 0;
};

/// n x K binary modality matrix plus per-modality occurrence counts and the
/// reference row. Occurrence counts are column sums over the n sample rows
/// only; the reference row is held apart and never counted.
///
/// Immutable after construction; safe for concurrent readers.
class DisjunctiveTable {
 public:
  DisjunctiveTable(DimensionSchema schema, std::vector<std::uint8_t> matrix, int rows,
                   std::vector<std::uint8_t> reference_row);

  int sample_size() const { return rows_; }  // n
  int column_count() const { return schema_.total_modalities(); }  // K
  const DimensionSchema& schema() const { return schema_; }

  std::uint8_t at(int row, int col) const { return matrix_[static_cast<std::size_t>(row) * column_count() + col]; }
  std::span<const std::uint8_t> row(int r) const;
  std::span<const std::uint8_t> reference_row() const { return reference_; }

  /// m per column, computed from the sample rows at construction.
  const std::vector<int>& occurrence() const { return occurrence_; }

  /// Columns declared in the schema but absent from the sample (m = 0).
  /// Such columns are kept in the layout but excluded from distance sums.
  const std::vector<int>& zero_occurrence_columns() const { return zero_columns_; }

 private:
  DimensionSchema schema_;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::uint8_t> reference_;
  std::vector<int> occurrence_;
  std::vector<int> zero_columns_;
  int rows_ = 0;
};

/// One-hot encodes the sample, dimension by dimension, using schema modality
/// order. Throws DataError on an empty sample or facts that do not validate.
CondensedTable build_tcc(const std::vector<FactRecord>& facts, const DimensionSchema& schema);

/// Flattens the condensed coding into the full n x K disjunctive table and
/// encodes the reference row with the identical column layout.
DisjunctiveTable build_cdt(const std::vector<FactRecord>& facts, const ReferenceProfile& reference,
                           const DimensionSchema& schema);

/// Builds a table straight from '0'/'1' row strings (length K each). Used by
/// the CDT reader and by tests working from raw binary rows. The matrix is
/// taken as-is; integrity is validate_cdt's job.
DisjunctiveTable make_cdt(DimensionSchema schema, const std::vector<std::string>& rows,
                          const std::string& reference_row);

/// Recomputed column sums over the sample rows (reference excluded).
std::vector<int> occurrence_counts(const DisjunctiveTable& cdt);

struct CdtViolation {
  enum class Kind { RowSum, BlockSum };
  Kind kind;
  int row = -1;        // 0-based sample row, RowSum only
  int dimension = -1;  // 0-based dimension block, BlockSum only
  std::string detail;
};

struct CdtValidation {
  std::vector<CdtViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Integrity check: every sample row sums to p, and each dimension block's
/// column sums add to n. Violations are data, not failures; every offending
/// row/block is reported.
CdtValidation validate_cdt(const DisjunctiveTable& cdt);

/// Serializes the table as a structured text document (JSON with stable key
/// order): n, p, K, the schema, the matrix row-major as bit strings, the
/// occurrence counts, and the reference row. read_cdt(write_cdt(t)) is
/// bit-exact.
void write_cdt(const DisjunctiveTable& cdt, std::ostream& out);
std::string write_cdt_string(const DisjunctiveTable& cdt);

/// Throws DataError on malformed documents or when the stored occurrence
/// counts disagree with the matrix.
DisjunctiveTable read_cdt(std::istream& in);

}  // namespace cubereduce
