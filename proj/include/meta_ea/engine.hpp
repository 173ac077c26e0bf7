#pragma once

#include "meta_ea/chromosome.hpp"
#include "meta_ea/micro_ea.hpp"
#include "meta_ea/objectives.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace meta_ea {

using Population = std::vector<MepChromosome>;

struct GenerationRecord {
  std::size_t generation = 0;
  double best_fitness = 0.0;
  double mean_fitness = 0.0;
  OperatorCounts best_operator_counts;
  std::size_t best_gene_index = 0;
  EaProgram best_program; // decoded best gene of the best chromosome
};

using ExperimentTrace = std::vector<GenerationRecord>;

/// Two independent tournaments of two distinct members each. Returns the
/// winners' indices. Lower fitness wins; ties go to the first drawn.
/// Throws ConfigError when the population has fewer than two members.
std::pair<std::size_t, std::size_t> binary_tournament(const Population& population, Rng& rng);

/// Index of the lowest-fitness member (earliest on ties).
std::size_t best_index(const Population& population);
/// Index of the highest-fitness member (earliest on ties).
std::size_t worst_index(const Population& population);

/// Evaluates every member; member i uses derive_seed(eval_seed, {i}).
void evaluate_population(Population& population, const ObjectiveSpec& objective, std::size_t runs,
                         std::uint64_t eval_seed, Execution exec = Execution::parallel);

/// One steady-state step: select, recombine (or copy), mutate, evaluate both
/// offspring, and let the better one replace the worst member if strictly better.
/// Offspring k is evaluated with derive_seed(eval_seed, {k}). Returns true when
/// a replacement happened.
bool steady_state_iteration(Population& population, const MacroConfig& config, const ObjectiveSpec& objective,
                            Rng& rng, std::uint64_t eval_seed, Execution exec = Execution::parallel);

GenerationRecord summarize(const Population& population, std::size_t generation);

/// One macro run: generation 0 plus `generations` blocks of population_size
/// steady-state iterations. Returns generations + 1 records. All randomness
/// derives from `seed`.
ExperimentTrace evolve(const MacroConfig& config, const ObjectiveSpec& objective, std::uint64_t seed,
                       Execution exec = Execution::parallel);

} // namespace meta_ea
