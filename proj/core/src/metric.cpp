#include "cubereduce/metric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace cubereduce {

double scale_factor(const DisjunctiveTable& cdt, const ReductionMask& mask,
                    const DistanceConfig& config) {
  switch (config.scale) {
    case ScaleMode::NOverPTotal:
      return static_cast<double>(cdt.sample_size()) / cdt.schema().dimension_count();
    case ScaleMode::NOverPRetained:
      return static_cast<double>(cdt.sample_size()) / mask.popcount();
    case ScaleMode::Fixed:
      if (!(config.fixed_lambda > 0.0)) throw UsageError("fixed scale lambda must be > 0");
      return config.fixed_lambda;
    case ScaleMode::Unit:
      return 1.0;
  }
  throw UsageError("unknown scale mode");
}

namespace {

void check_mask(const DisjunctiveTable& cdt, const ReductionMask& mask) {
  if (mask.size() != cdt.schema().dimension_count()) {
    throw UsageError("mask length " + std::to_string(mask.size()) +
                     " does not match dimension count " +
                     std::to_string(cdt.schema().dimension_count()));
  }
  if (mask.none()) {
    throw UsageError("empty reduction: mask must retain at least one dimension");
  }
}

// Unscaled chi-squared sum. Columns are visited in fixed left-to-right order;
// m = 0 columns are skipped.
double unscaled_sum(const DisjunctiveTable& cdt, int fact_index, const ReductionMask& mask,
                    MaskingVariant variant) {
  const DimensionSchema& schema = cdt.schema();
  const std::vector<int>& m = cdt.occurrence();
  auto ref = cdt.reference_row();
  double sum = 0.0;
  for (int j = 0; j < schema.dimension_count(); ++j) {
    const bool retained = mask.retains(j);
    if (variant == MaskingVariant::Remove && !retained) continue;
    const int offset = schema.column_offset(j);
    for (int c = offset; c < offset + schema.modality_count(j); ++c) {
      if (m[c] == 0) continue;
      const double fact_bit = retained ? static_cast<double>(cdt.at(fact_index, c)) : 0.0;
      const double diff = static_cast<double>(ref[c]) - fact_bit;
      sum += diff * diff / m[c];
    }
  }
  return sum;
}

}  // namespace

double chi2_distance(const DisjunctiveTable& cdt, int fact_index, const ReductionMask& mask,
                     const DistanceConfig& config) {
  check_mask(cdt, mask);
  if (fact_index < 0 || fact_index >= cdt.sample_size()) {
    throw DataError("fact index " + std::to_string(fact_index) + " out of range");
  }
  return scale_factor(cdt, mask, config) * unscaled_sum(cdt, fact_index, mask, config.variant);
}

std::vector<double> distance_vector(const DisjunctiveTable& cdt, const ReductionMask& mask,
                                    const DistanceConfig& config) {
  check_mask(cdt, mask);
  const double lambda = scale_factor(cdt, mask, config);
  std::vector<double> distances(cdt.sample_size());
  for (int i = 0; i < cdt.sample_size(); ++i) {
    distances[i] = lambda * unscaled_sum(cdt, i, mask, config.variant);
  }
  return distances;
}

EvaluationResult subset_fitness(const DisjunctiveTable& cdt, const ReductionMask& mask,
                                const DistanceConfig& config) {
  EvaluationResult result;
  result.mask = mask;
  result.distances = distance_vector(cdt, mask, config);
  result.fitness = *std::min_element(result.distances.begin(), result.distances.end());
  const double tie_cutoff = result.fitness + result.fitness * kTieToleranceRel;
  for (int i = 0; i < static_cast<int>(result.distances.size()); ++i) {
    if (result.distances[i] <= tie_cutoff) result.argmin_facts.push_back(i);
  }
  return result;
}

const char* to_string(MaskingVariant variant) {
  return variant == MaskingVariant::Remove ? "remove" : "zero-facts";
}

std::string to_string(ScaleMode scale, double fixed_lambda) {
  switch (scale) {
    case ScaleMode::NOverPTotal: return "total";
    case ScaleMode::NOverPRetained: return "retained";
    case ScaleMode::Unit: return "unit";
    case ScaleMode::Fixed: {
      char buf[40];
      auto res = std::to_chars(buf, buf + sizeof buf, fixed_lambda);
      return "fixed:" + std::string(buf, res.ptr);
    }
  }
  return "unit";
}

std::string describe(const DistanceConfig& config) {
  return std::string(to_string(config.variant)) + "/" + to_string(config.scale, config.fixed_lambda);
}

MaskingVariant parse_variant(const std::string& text) {
  if (text == "remove") return MaskingVariant::Remove;
  if (text == "zero-facts") return MaskingVariant::ZeroFacts;
  throw UsageError("unknown variant \"" + text + "\" (expected remove or zero-facts)");
}

void parse_scale(const std::string& text, DistanceConfig& config) {
  if (text == "total") {
    config.scale = ScaleMode::NOverPTotal;
  } else if (text == "retained") {
    config.scale = ScaleMode::NOverPRetained;
  } else if (text == "unit") {
    config.scale = ScaleMode::Unit;
  } else if (text.rfind("fixed:", 0) == 0) {
    const std::string value = text.substr(6);
    double lambda = 0.0;
    auto res = std::from_chars(value.data(), value.data() + value.size(), lambda);
    if (res.ec != std::errc{} || res.ptr != value.data() + value.size() || !(lambda > 0.0)) {
      throw UsageError("bad fixed scale \"" + text + "\" (expected fixed:<positive real>)");
    }
    config.scale = ScaleMode::Fixed;
    config.fixed_lambda = lambda;
  } else {
    throw UsageError("unknown scale \"" + text + "\" (expected total, retained, unit or fixed:<x>)");
  }
}

}  // namespace cubereduce
