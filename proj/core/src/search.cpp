#include "cubereduce/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "cubereduce/report.hpp"

namespace cubereduce {

std::vector<ReductionMask> init_population(int p, int population_size, SplitRng& rng) {
  if (p < 1) throw UsageError("dimension count must be >= 1");
  if (population_size < 2) throw UsageError("population size must be >= 2");
  std::vector<ReductionMask> population;
  population.reserve(population_size);
  for (int i = 0; i < population_size; ++i) {
    std::vector<std::uint8_t> bits(p);
    for (int j = 0; j < p; ++j) bits[j] = static_cast<std::uint8_t>(rng.next_u64() & 1u);
    ReductionMask mask = repair_mask(ReductionMask(std::move(bits)), rng);
    mask.generation_id = 0;
    population.push_back(std::move(mask));
  }
  return population;
}

std::vector<EvaluationResult> evaluate_population(const DisjunctiveTable& cdt,
                                                  const std::vector<ReductionMask>& masks,
                                                  const DistanceConfig& config) {
  std::vector<EvaluationResult> results;
  results.reserve(masks.size());
  for (const auto& mask : masks) results.push_back(subset_fitness(cdt, mask, config));
  return results;
}

std::vector<ReductionMask> select_survivors(const std::vector<EvaluationResult>& generation,
                                            double limit) {
  if (!(limit > 0.0)) throw UsageError("selection limit must be > 0");
  std::vector<ReductionMask> survivors;
  for (const auto& individual : generation) {
    if (individual.fitness < limit) survivors.push_back(individual.mask);
  }
  if (survivors.empty() && !generation.empty()) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(generation.size()); ++i) {
      if (generation[i].fitness < generation[best].fitness) best = i;
    }
    survivors.push_back(generation[best].mask);
  }
  return survivors;
}

std::pair<ReductionMask, ReductionMask> crossover_pair(const ReductionMask& a,
                                                       const ReductionMask& b, SplitRng& rng) {
  const int p = a.size();
  if (p != b.size()) throw UsageError("crossover parents have different lengths");
  if (p < 2) throw UsageError("crossover needs at least 2 genes");
  const int point = rng.uniform_int(1, p - 1);
  std::vector<std::uint8_t> child1(p), child2(p);
  for (int j = 0; j < p; ++j) {
    const bool from_a_first = j < point;
    child1[j] = (from_a_first ? a : b).retains(j) ? 1 : 0;
    child2[j] = (from_a_first ? b : a).retains(j) ? 1 : 0;
  }
  return {repair_mask(ReductionMask(std::move(child1)), rng),
          repair_mask(ReductionMask(std::move(child2)), rng)};
}

ReductionMask mutate(const ReductionMask& mask, const GaConfig& config, SplitRng& rng) {
  const int p = mask.size();
  ReductionMask mutated = mask;
  if (config.paper_compat_mutation) {
    const int nb_mut = rng.uniform_int(1, p);
    // Floyd's sampling of nb_mut distinct positions, then flip them.
    std::vector<std::uint8_t> chosen(p, 0);
    for (int j = p - nb_mut; j < p; ++j) {
      int t = rng.uniform_int(0, j);
      if (chosen[t]) t = j;
      chosen[t] = 1;
    }
    for (int j = 0; j < p; ++j) {
      if (chosen[j]) mutated.set(j, !mutated.retains(j));
    }
  } else {
    for (int j = 0; j < p; ++j) {
      if (rng.bernoulli(config.mutation_rate)) mutated.set(j, !mutated.retains(j));
    }
  }
  return repair_mask(std::move(mutated), rng);
}

namespace {

void check_config(const GaConfig& config) {
  if (config.population_size < 2) throw UsageError("population size must be >= 2");
  if (config.max_generations < 1) throw UsageError("max generations must be >= 1");
  if (config.mutation_rate < 0.0 || config.mutation_rate > 1.0) {
    throw UsageError("mutation rate must be in [0, 1]");
  }
  if (config.stagnation_window < 1) throw UsageError("stagnation window must be >= 1");
  if (config.selection_limit && !(*config.selection_limit > 0.0)) {
    throw UsageError("selection limit must be > 0");
  }
}

double median_fitness(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

GaResult run_ga(const DisjunctiveTable& cdt, const GaConfig& ga_config,
                const DistanceConfig& distance_config) {
  check_config(ga_config);
  const int p = cdt.schema().dimension_count();
  const SplitRng root(ga_config.seed);

  SplitRng init_rng = root.stream(0);
  std::vector<ReductionMask> population =
      init_population(p, ga_config.population_size, init_rng);

  GaResult result;
  double best_fitness = std::numeric_limits<double>::infinity();
  double limit = ga_config.selection_limit.value_or(0.0);
  int stagnant = 0;

  for (int g = 0;; ++g) {
    std::vector<EvaluationResult> evals = evaluate_population(cdt, population, distance_config);

    if (g == 0 && !ga_config.selection_limit) {
      std::vector<double> fitnesses;
      fitnesses.reserve(evals.size());
      for (const auto& e : evals) fitnesses.push_back(e.fitness);
      limit = median_fitness(std::move(fitnesses));
      if (!(limit > 0.0)) limit = std::numeric_limits<double>::min();
    }

    bool improved = false;
    double fitness_sum = 0.0;
    for (const auto& eval : evals) {
      fitness_sum += eval.fitness;
      if (eval.fitness < best_fitness) {
        best_fitness = eval.fitness;
        result.best_mask = eval.mask;
        result.best = eval;
        improved = true;
      }
    }
    stagnant = improved ? 0 : stagnant + 1;

    std::vector<ReductionMask> survivors = select_survivors(evals, limit);

    Generation record;
    record.index = g;
    record.individuals.reserve(evals.size());
    for (std::size_t i = 0; i < evals.size(); ++i) {
      record.individuals.push_back({population[i], evals[i]});
    }
    record.best_mask = result.best_mask;
    record.best_fitness = best_fitness;
    record.mean_fitness = fitness_sum / static_cast<double>(evals.size());
    record.survivor_count = static_cast<int>(survivors.size());
    result.log.push_back(std::move(record));

    if (g + 1 >= ga_config.max_generations) break;
    if (g > 0 && stagnant >= ga_config.stagnation_window) break;

    // Steady state: survivors persist, offspring of uniformly chosen survivor
    // pairs fill back up to N_pop. The population minimum always qualifies
    // (or is the fallback survivor), which is what makes this loop elitist.
    SplitRng op_rng = root.stream(static_cast<std::uint64_t>(g) + 1);
    std::vector<ReductionMask> next = survivors;
    while (static_cast<int>(next.size()) < ga_config.population_size) {
      const int last = static_cast<int>(survivors.size()) - 1;
      const ReductionMask& parent_a = survivors[op_rng.uniform_int(0, last)];
      const ReductionMask& parent_b = survivors[op_rng.uniform_int(0, last)];
      ReductionMask child1 = parent_a;
      ReductionMask child2 = parent_b;
      if (p >= 2) {
        std::tie(child1, child2) = crossover_pair(parent_a, parent_b, op_rng);
      }
      child1 = mutate(child1, ga_config, op_rng);
      child2 = mutate(child2, ga_config, op_rng);
      child1.generation_id = static_cast<std::uint32_t>(g) + 1;
      child2.generation_id = static_cast<std::uint32_t>(g) + 1;
      next.push_back(std::move(child1));
      if (static_cast<int>(next.size()) < ga_config.population_size) {
        next.push_back(std::move(child2));
      }
    }
    population = std::move(next);
  }

  result.selection_limit_used = limit;
  return result;
}

void write_generation_log(const std::vector<Generation>& log, std::ostream& out) {
  out << "generation,best_mask,best_fitness,mean_fitness,survivors\n";
  for (const auto& record : log) {
    out << record.index << ',' << record.best_mask.to_string() << ','
        << format_double(record.best_fitness) << ',' << format_double(record.mean_fitness) << ','
        << record.survivor_count << '\n';
  }
}

}  // namespace cubereduce
