#pragma once

#include <string>
#include <vector>

#include "cubereduce/coding.hpp"
#include "cubereduce/model.hpp"

namespace cubereduce {

/// The two masking semantics for non-retained dimensions:
///  - Remove: their modality columns are dropped from the sum entirely, on
///    both sides.
///  - ZeroFacts: the fact's bits on those columns are zeroed while the
///    reference keeps its 1s, so every fact under the same mask carries the
///    identical reference-only offset.
enum class MaskingVariant { Remove, ZeroFacts };

/// Multiplicative constant applied to the chi-squared sum.
enum class ScaleMode { NOverPTotal, NOverPRetained, Fixed, Unit };

struct DistanceConfig {
  MaskingVariant variant = MaskingVariant::Remove;
  ScaleMode scale = ScaleMode::NOverPRetained;
  double fixed_lambda = 1.0;  // used when scale == Fixed; must be > 0
};

/// Relative tolerance for grouping distances that tie at the minimum.
inline constexpr double kTieToleranceRel = 1e-9;

struct EvaluationResult {
  ReductionMask mask;
  std::vector<double> distances;  // one per fact, CDT row order
  double fitness = 0.0;           // min(distances)
  std::vector<int> argmin_facts;  // 0-based indices within tie tolerance, ascending
};

/// The scale factor for this (config, mask): n/p, n/popcount(mask), the fixed
/// lambda, or 1.
double scale_factor(const DisjunctiveTable& cdt, const ReductionMask& mask,
                    const DistanceConfig& config);

/// Chi-squared distance between the reference and fact `fact_index` under a
/// reduction mask:
///
///   lambda * sum over columns of (ref - y)^2 / m
///
/// where the column set and y follow the masking variant. Columns with m = 0
/// (schema-declared modality absent from the sample) are excluded from the
/// sum. Accumulation is fixed left-to-right in column order, so results are
/// bit-identical regardless of caller-side evaluation order.
///
/// Throws UsageError on an empty mask, DataError on a bad fact index.
double chi2_distance(const DisjunctiveTable& cdt, int fact_index, const ReductionMask& mask,
                     const DistanceConfig& config);

/// Element i is chi2_distance for fact i, in CDT row order.
std::vector<double> distance_vector(const DisjunctiveTable& cdt, const ReductionMask& mask,
                                    const DistanceConfig& config);

/// Fitness of a mask = the minimum distance; argmin_facts collects every fact
/// within relative tie tolerance of that minimum.
EvaluationResult subset_fitness(const DisjunctiveTable& cdt, const ReductionMask& mask,
                                const DistanceConfig& config);

const char* to_string(MaskingVariant variant);
std::string to_string(ScaleMode scale, double fixed_lambda);
std::string describe(const DistanceConfig& config);

MaskingVariant parse_variant(const std::string& text);
/// Accepts "total", "retained", "unit", "fixed:<lambda>".
void parse_scale(const std::string& text, DistanceConfig& config);

}  // namespace cubereduce
