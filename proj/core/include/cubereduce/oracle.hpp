#pragma once

#include <optional>
#include <vector>

#include "cubereduce/metric.hpp"

namespace cubereduce {

/// Exhaustive evaluation of all 2^p - 1 non-empty masks. Entries are ordered
/// by (popcount, then bit string), so the result is deterministic and
/// independent of evaluation order.
struct SweepResult {
  std::vector<EvaluationResult> entries;
  int optimum_index = -1;  // min fitness; ties broken by fewer retained dims, then lex smallest
};

inline constexpr int kDefaultSweepCeiling = 24;

/// Throws UsageError when p exceeds the ceiling (exhaustive cost guard).
SweepResult sweep_all_masks(const DisjunctiveTable& cdt, const DistanceConfig& config,
                            int max_dimensions = kDefaultSweepCeiling);

/// Global optimum, or the optimum restricted to masks retaining exactly
/// `retained_count` dimensions.
const EvaluationResult& best_mask(const SweepResult& sweep,
                                  std::optional<int> retained_count = std::nullopt);

struct Calibration {
  double lambda = 0.0;
  double residual = 0.0;  // RMS error of lambda*u against the targets
};

/// Least-squares multiplicative fit of `targets` against the unit-scale
/// distances u of (mask, variant): lambda = sum(u*t) / sum(u*u). Throws
/// DataError when the unit distances are all zero or the target count does
/// not match the sample size.
Calibration calibrate_scale(const DisjunctiveTable& cdt, const ReductionMask& mask,
                            MaskingVariant variant, const std::vector<double>& targets);

}  // namespace cubereduce
