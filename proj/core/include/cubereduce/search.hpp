#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "cubereduce/metric.hpp"
#include "cubereduce/rng.hpp"

namespace cubereduce {

struct GaConfig {
  int population_size = 20;   // >= 2
  int max_generations = 100;  // >= 1, counts evaluated generations including the initial one
  /// Survivor threshold: individuals with fitness strictly below the limit
  /// survive. Unset = adaptive default, the median fitness of generation 0.
  std::optional<double> selection_limit;
  double mutation_rate = 0.05;  // per-gene flip probability in default mode
  /// Paper-compatible mutation: draw nb_mut in {1..p} and flip that many
  /// uniformly chosen distinct positions, instead of per-gene Bernoulli.
  bool paper_compat_mutation = false;
  int stagnation_window = 20;  // stop after this many generations without improvement
  std::uint64_t seed = 0;
};

struct Individual {
  ReductionMask mask;
  EvaluationResult eval;
};

struct Generation {
  int index = 0;
  std::vector<Individual> individuals;
  ReductionMask best_mask;      // best-so-far across generations (elitist)
  double best_fitness = 0.0;    // non-increasing in index
  double mean_fitness = 0.0;    // mean over this generation's individuals
  int survivor_count = 0;       // individuals below the selection limit
};

struct GaResult {
  ReductionMask best_mask;
  EvaluationResult best;
  std::vector<Generation> log;
  double selection_limit_used = 0.0;
};

/// N_pop masks of length p with independent uniform bits; all-zero draws are
/// repaired by setting one uniformly chosen bit.
std::vector<ReductionMask> init_population(int p, int population_size, SplitRng& rng);

/// subset_fitness per mask, input order preserved. Duplicates evaluate to
/// duplicate results; no dedup at this layer.
std::vector<EvaluationResult> evaluate_population(const DisjunctiveTable& cdt,
                                                  const std::vector<ReductionMask>& masks,
                                                  const DistanceConfig& config);

/// Keeps exactly the individuals with fitness < limit. If none qualify, the
/// single best individual (lowest fitness, first on ties) survives, so the
/// population can never go extinct.
std::vector<ReductionMask> select_survivors(const std::vector<EvaluationResult>& generation,
                                            double limit);

/// Single-point crossover at a point drawn uniformly from 1..p-1; children
/// swap suffixes after the point. All-zero children are repaired.
std::pair<ReductionMask, ReductionMask> crossover_pair(const ReductionMask& a,
                                                       const ReductionMask& b, SplitRng& rng);

/// Default mode: each gene flips independently with probability
/// config.mutation_rate. Paper-compat mode: nb_mut uniformly chosen distinct
/// positions flip. All-zero results are repaired.
ReductionMask mutate(const ReductionMask& mask, const GaConfig& config, SplitRng& rng);

/// The full loop: evaluate, select by threshold, refill to N_pop with
/// crossover of uniformly chosen survivor pairs plus mutation, repeat. Stops
/// at max_generations or after stagnation_window generations without
/// improvement. Elitist: the best individual always survives, so best-so-far
/// fitness is non-increasing and the returned best is in the final log.
/// Fully deterministic given the seed.
GaResult run_ga(const DisjunctiveTable& cdt, const GaConfig& ga_config,
                const DistanceConfig& distance_config);

/// One CSV record per generation: index, best mask, best fitness, population
/// mean fitness, survivor count. Identical runs render byte-identical logs.
void write_generation_log(const std::vector<Generation>& log, std::ostream& out);

}  // namespace cubereduce
