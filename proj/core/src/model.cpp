#include "cubereduce/model.hpp"

#include <algorithm>
#include <unordered_set>

#include "cubereduce/rng.hpp"

namespace cubereduce {

DimensionSchema::DimensionSchema(std::vector<Dimension> dimensions)
    : dimensions_(std::move(dimensions)) {
  offsets_.reserve(dimensions_.size());
  for (const auto& dim : dimensions_) {
    offsets_.push_back(total_);
    total_ += static_cast<int>(dim.modalities.size());
  }
}

int DimensionSchema::find_dimension(std::string_view name) const {
  for (int j = 0; j < dimension_count(); ++j) {
    if (dimensions_[j].name == name) return j;
  }
  return -1;
}

int DimensionSchema::find_modality(int dim, std::string_view label) const {
  const auto& mods = dimensions_[dim].modalities;
  for (int i = 0; i < static_cast<int>(mods.size()); ++i) {
    if (mods[i] == label) return i;
  }
  return -1;
}

ValidationReport validate_schema(const DimensionSchema& schema) {
  ValidationReport report;
  if (schema.dimension_count() == 0) {
    report.errors.push_back("schema declares no dimensions");
    return report;
  }
  std::unordered_set<std::string> seen_names;
  for (int j = 0; j < schema.dimension_count(); ++j) {
    const Dimension& dim = schema.dimension(j);
    if (dim.name.empty()) {
      report.errors.push_back("dimension " + std::to_string(j + 1) + " has an empty name");
    }
    if (!seen_names.insert(dim.name).second) {
      report.errors.push_back("duplicate dimension name \"" + dim.name + "\"");
    }
    if (dim.modalities.size() < 2) {
      report.errors.push_back("dimension \"" + dim.name +
                              "\" has fewer than 2 modalities");
    }
    std::unordered_set<std::string> seen_mods;
    for (const auto& mod : dim.modalities) {
      if (mod.empty()) {
        report.errors.push_back("dimension \"" + dim.name + "\" declares an empty modality");
      }
      if (!seen_mods.insert(mod).second) {
        report.errors.push_back("duplicate modality \"" + mod + "\" in dimension \"" +
                                dim.name + "\"");
      }
    }
  }
  return report;
}

void ensure_valid(const DimensionSchema& schema) {
  ValidationReport report = validate_schema(schema);
  if (report.ok()) return;
  std::string message = "invalid schema:";
  for (const auto& err : report.errors) message += "\n  - " + err;
  throw DataError(message);
}

ValidationReport validate_fact(const FactRecord& fact, const DimensionSchema& schema) {
  ValidationReport report;
  if (static_cast<int>(fact.values.size()) != schema.dimension_count()) {
    report.errors.push_back("record has " + std::to_string(fact.values.size()) +
                            " values, schema has " + std::to_string(schema.dimension_count()) +
                            " dimensions");
    return report;
  }
  for (int j = 0; j < schema.dimension_count(); ++j) {
    if (schema.find_modality(j, fact.values[j]) < 0) {
      report.errors.push_back("unknown modality \"" + fact.values[j] + "\" for dimension \"" +
                              schema.dimension(j).name + "\"");
    }
  }
  return report;
}

std::vector<int> resolve_fact(const FactRecord& fact, const DimensionSchema& schema) {
  if (static_cast<int>(fact.values.size()) != schema.dimension_count()) {
    throw DataError("record has " + std::to_string(fact.values.size()) + " values, schema has " +
                    std::to_string(schema.dimension_count()) + " dimensions");
  }
  std::vector<int> indices(fact.values.size());
  for (int j = 0; j < schema.dimension_count(); ++j) {
    int idx = schema.find_modality(j, fact.values[j]);
    if (idx < 0) {
      throw DataError("unknown modality \"" + fact.values[j] + "\" for dimension \"" +
                      schema.dimension(j).name + "\"");
    }
    indices[j] = idx;
  }
  return indices;
}

ReferenceProfile build_reference(const FactRecord& row, const DimensionSchema& schema) {
  resolve_fact(row, schema);  // throws on arity or vocabulary violations
  return ReferenceProfile{row};
}

ReductionMask ReductionMask::from_index(std::uint32_t value, int p) {
  std::vector<std::uint8_t> bits(p, 0);
  for (int j = 0; j < p; ++j) bits[j] = (value >> j) & 1u;
  return ReductionMask(std::move(bits));
}

int ReductionMask::popcount() const {
  int count = 0;
  for (auto b : bits_) count += b;
  return count;
}

std::vector<int> ReductionMask::retained_dimensions() const {
  std::vector<int> dims;
  for (int j = 0; j < size(); ++j) {
    if (bits_[j]) dims.push_back(j);
  }
  return dims;
}

std::string ReductionMask::to_string() const {
  std::string text(bits_.size(), '0');
  for (std::size_t j = 0; j < bits_.size(); ++j) {
    if (bits_[j]) text[j] = '1';
  }
  return text;
}

ReductionMask parse_mask(std::string_view text, int p) {
  if (static_cast<int>(text.size()) != p) {
    throw DataError("mask \"" + std::string(text) + "\" has length " +
                    std::to_string(text.size()) + ", expected " + std::to_string(p));
  }
  std::vector<std::uint8_t> bits(p, 0);
  for (int j = 0; j < p; ++j) {
    if (text[j] == '1') {
      bits[j] = 1;
    } else if (text[j] != '0') {
      throw DataError(std::string("mask contains non-binary character '") + text[j] +
                      "' at position " + std::to_string(j + 1));
    }
  }
  ReductionMask mask{std::move(bits)};
  if (mask.none()) {
    throw DataError("empty reduction: mask must retain at least one dimension");
  }
  return mask;
}

ReductionMask repair_mask(ReductionMask mask, SplitRng& rng) {
  if (mask.size() > 0 && mask.none()) {
    mask.set(rng.uniform_int(0, mask.size() - 1), true);
  }
  return mask;
}

}  // namespace cubereduce
