#include "cubereduce/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace cubereduce {

SweepResult sweep_all_masks(const DisjunctiveTable& cdt, const DistanceConfig& config,
                            int max_dimensions) {
  const int p = cdt.schema().dimension_count();
  if (p > max_dimensions) {
    throw UsageError("sweep over " + std::to_string(p) + " dimensions exceeds the ceiling of " +
                     std::to_string(max_dimensions) + " (2^p masks)");
  }
  // The 2^p mask space minus the invalid empty mask: 2^p - 1 evaluable entries.
  SweepResult result;
  result.entries.reserve((std::size_t{1} << p) - 1);
  for (std::uint32_t value = 1; value < (std::uint32_t{1} << p); ++value) {
    result.entries.push_back(
        subset_fitness(cdt, ReductionMask::from_index(value, p), config));
  }
  std::sort(result.entries.begin(), result.entries.end(),
            [](const EvaluationResult& a, const EvaluationResult& b) {
              const int pa = a.mask.popcount(), pb = b.mask.popcount();
              if (pa != pb) return pa < pb;
              return a.mask.to_string() < b.mask.to_string();
            });
  // Entry order is (popcount, lex), so the first strict minimum is also the
  // tie-broken optimum: fewer retained dimensions, then lex smallest.
  result.optimum_index = 0;
  for (int i = 1; i < static_cast<int>(result.entries.size()); ++i) {
    if (result.entries[i].fitness < result.entries[result.optimum_index].fitness) {
      result.optimum_index = i;
    }
  }
  return result;
}

const EvaluationResult& best_mask(const SweepResult& sweep, std::optional<int> retained_count) {
  if (sweep.entries.empty()) throw UsageError("sweep result is empty");
  if (!retained_count) return sweep.entries[sweep.optimum_index];
  const int p = sweep.entries.front().mask.size();
  if (*retained_count < 1 || *retained_count > p) {
    throw UsageError("retained count " + std::to_string(*retained_count) + " out of range 1.." +
                     std::to_string(p));
  }
  const EvaluationResult* best = nullptr;
  for (const auto& entry : sweep.entries) {
    if (entry.mask.popcount() != *retained_count) continue;
    if (!best || entry.fitness < best->fitness) best = &entry;
  }
  return *best;  // every popcount 1..p occurs in a full sweep
}

Calibration calibrate_scale(const DisjunctiveTable& cdt, const ReductionMask& mask,
                            MaskingVariant variant, const std::vector<double>& targets) {
  if (static_cast<int>(targets.size()) != cdt.sample_size()) {
    throw DataError("got " + std::to_string(targets.size()) + " targets for " +
                    std::to_string(cdt.sample_size()) + " facts");
  }
  DistanceConfig unit;
  unit.variant = variant;
  unit.scale = ScaleMode::Unit;
  const std::vector<double> u = distance_vector(cdt, mask, unit);

  double uu = 0.0, ut = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    uu += u[i] * u[i];
    ut += u[i] * targets[i];
  }
  if (uu == 0.0) {
    throw DataError("all unit-scale distances are zero; no multiplicative fit exists");
  }
  Calibration fit;
  fit.lambda = ut / uu;
  double sq = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double err = fit.lambda * u[i] - targets[i];
    sq += err * err;
  }
  fit.residual = std::sqrt(sq / static_cast<double>(u.size()));
  return fit;
}

}  // namespace cubereduce
