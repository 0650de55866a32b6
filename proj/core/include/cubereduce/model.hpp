#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubereduce/error.hpp"

namespace cubereduce {

class SplitRng;

struct Dimension {
  std::string name;
  std::vector<std::string> modalities;
};

/// Ordered dimensions, each with an ordered modality list. The order declared
/// here, not the order data happens to arrive in, fixes the column layout of
/// every disjunctive table built downstream.
///
/// Immutable after construction; safe to share across concurrent readers.
class DimensionSchema {
 public:
  DimensionSchema() = default;
  explicit DimensionSchema(std::vector<Dimension> dimensions);

  int dimension_count() const { return static_cast<int>(dimensions_.size()); }  // p
  int total_modalities() const { return total_; }                               // K
  int modality_count(int dim) const { return static_cast<int>(dimensions_[dim].modalities.size()); }
  /// First column of this dimension's block in the flattened K-column layout.
  int column_offset(int dim) const { return offsets_[dim]; }
  const Dimension& dimension(int dim) const { return dimensions_[dim]; }
  const std::vector<Dimension>& dimensions() const { return dimensions_; }

  int find_dimension(std::string_view name) const;
  int find_modality(int dim, std::string_view label) const;

  bool operator==(const DimensionSchema& other) const { return dimensions_ == other.dimensions_; }

 private:
  std::vector<Dimension> dimensions_;
  std::vector<int> offsets_;
  int total_ = 0;
};

inline bool operator==(const Dimension& a, const Dimension& b) {
  return a.name == b.name && a.modalities == b.modalities;
}

struct ValidationReport {
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};

/// Itemized invariant check: duplicate dimension names, duplicate modalities
/// within a dimension, dimensions with fewer than 2 modalities, empty schema.
/// Validation never mutates the schema; re-validating a valid schema yields
/// an empty report again.
ValidationReport validate_schema(const DimensionSchema& schema);

/// Throws DataError listing every violation when the schema is invalid.
void ensure_valid(const DimensionSchema& schema);

/// One sample row: exactly one modality label per dimension, in schema order.
struct FactRecord {
  std::vector<std::string> values;
};

ValidationReport validate_fact(const FactRecord& fact, const DimensionSchema& schema);

/// Modality index per dimension. Throws DataError on wrong arity or labels
/// not declared in the schema (closed vocabularies, case-sensitive).
std::vector<int> resolve_fact(const FactRecord& fact, const DimensionSchema& schema);

/// The profile all distances are measured against. Held apart from the
/// sample: it never contributes to occurrence counts.
struct ReferenceProfile {
  FactRecord row;
};

ReferenceProfile build_reference(const FactRecord& row, const DimensionSchema& schema);

/// Length-p bit vector; bit j set = dimension j retained. This is the GA
/// chromosome. An all-zero mask is invalid for evaluation and is rejected at
/// parse time; the search operators repair all-zero offspring instead.
class ReductionMask {
 public:
  ReductionMask() = default;
  explicit ReductionMask(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

  static ReductionMask full(int p) { return ReductionMask(std::vector<std::uint8_t>(p, 1)); }
  /// Bit j of `value` (LSB = dimension 0) decides whether dimension j is retained.
  static ReductionMask from_index(std::uint32_t value, int p);

  int size() const { return static_cast<int>(bits_.size()); }
  bool retains(int dim) const { return bits_[dim] != 0; }
  void set(int dim, bool value) { bits_[dim] = value ? 1 : 0; }
  int popcount() const;
  bool none() const { return popcount() == 0; }
  std::vector<int> retained_dimensions() const;

  /// Leftmost character = dimension 0 ("011010" retains dimensions 2, 3 and 5
  /// in 1-based speak).
  std::string to_string() const;

  /// Provenance only: generation that produced this mask, when known.
  /// Excluded from equality so parse/format round trips compare clean.
  std::optional<std::uint32_t> generation_id;

  friend bool operator==(const ReductionMask& a, const ReductionMask& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const ReductionMask& a, const ReductionMask& b) { return !(a == b); }

 private:
  std::vector<std::uint8_t> bits_;
};

/// Parses a '0'/'1' string of length p, leftmost character = dimension 0.
/// Rejects length mismatches, non-binary characters, and the all-zero mask
/// ("empty reduction").
ReductionMask parse_mask(std::string_view text, int p);

/// If the mask is all-zero, sets one uniformly chosen bit. Identity otherwise.
ReductionMask repair_mask(ReductionMask mask, SplitRng& rng);

}  // namespace cubereduce
