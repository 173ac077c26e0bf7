#include "meta_ea/engine.hpp"

#include "meta_ea/errors.hpp"

#include <algorithm>
#include <numeric>

namespace meta_ea {

std::pair<std::size_t, std::size_t> binary_tournament(const Population& population, Rng& rng)
{
  const std::size_t n = population.size();
  if (n < 2)
    throw ConfigError("binary_tournament: population needs at least 2 members");

  auto tournament = [&] {
    std::uniform_int_distribution<std::size_t> first_dist(0, n - 1);
    std::uniform_int_distribution<std::size_t> second_dist(0, n - 2);
    const std::size_t i = first_dist(rng);
    std::size_t j = second_dist(rng);
    if (j >= i)
      ++j;
    return population[j].fitness() < population[i].fitness() ? j : i;
  };
  const std::size_t a = tournament();
  const std::size_t b = tournament();
  return {a, b};
}

std::size_t best_index(const Population& population)
{
  std::size_t best = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (population[i].fitness() < population[best].fitness())
      best = i;
  }
  return best;
}

std::size_t worst_index(const Population& population)
{
  std::size_t worst = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (population[i].fitness() > population[worst].fitness())
      worst = i;
  }
  return worst;
}

void evaluate_population(Population& population, const ObjectiveSpec& objective, std::size_t runs,
                         std::uint64_t eval_seed, Execution exec)
{
  for (std::size_t i = 0; i < population.size(); ++i)
    population[i].cached_eval = evaluate(population[i], objective, runs, derive_seed(eval_seed, {i}), exec);
}

bool steady_state_iteration(Population& population, const MacroConfig& config, const ObjectiveSpec& objective,
                            Rng& rng, std::uint64_t eval_seed, Execution exec)
{
  const auto [ia, ib] = binary_tournament(population, rng);

  std::bernoulli_distribution do_crossover(config.crossover_probability);
  MepChromosome first, second;
  if (do_crossover(rng)) {
    std::tie(first, second) = uniform_crossover(population[ia], population[ib], rng);
  } else {
    first.genes = population[ia].genes;
    second.genes = population[ib].genes;
  }
  first = mutate_chromosome(std::move(first), config.mutations_per_chromosome, rng);
  second = mutate_chromosome(std::move(second), config.mutations_per_chromosome, rng);
  first.cached_eval = evaluate(first, objective, config.runs_per_eval, derive_seed(eval_seed, {0}), exec);
  second.cached_eval = evaluate(second, objective, config.runs_per_eval, derive_seed(eval_seed, {1}), exec);

  MepChromosome& better = second.fitness() < first.fitness() ? second : first;
  const std::size_t worst = worst_index(population);
  if (better.fitness() < population[worst].fitness()) {
    population[worst] = std::move(better);
    return true;
  }
  return false;
}

GenerationRecord summarize(const Population& population, std::size_t generation)
{
  const std::size_t best = best_index(population);
  const MepChromosome& c = population[best];

  GenerationRecord rec;
  rec.generation = generation;
  rec.best_fitness = c.fitness();
  rec.mean_fitness = std::accumulate(population.begin(), population.end(), 0.0,
                                     [](double acc, const MepChromosome& m) { return acc + m.fitness(); }) /
                     static_cast<double>(population.size());
  rec.best_gene_index = c.cached_eval.value().best_gene;
  rec.best_program = decode(c, rec.best_gene_index);
  rec.best_operator_counts = count_operators(rec.best_program);
  return rec;
}

ExperimentTrace evolve(const MacroConfig& config, const ObjectiveSpec& objective, std::uint64_t seed,
                       Execution exec)
{
  config.validate();
  Rng rng = make_rng(derive_seed(seed, {stream::macro}));

  Population population;
  population.reserve(config.population_size);
  for (std::size_t i = 0; i < config.population_size; ++i)
    population.push_back(random_chromosome(config, rng));
  evaluate_population(population, objective, config.runs_per_eval, derive_seed(seed, {stream::init_eval}), exec);

  ExperimentTrace trace;
  trace.reserve(config.generations + 1);
  trace.push_back(summarize(population, 0));

  std::uint64_t step = 0;
  for (std::size_t gen = 1; gen <= config.generations; ++gen) {
    for (std::size_t k = 0; k < config.population_size; ++k, ++step)
      steady_state_iteration(population, config, objective, rng,
                             derive_seed(seed, {stream::offspring_eval, step}), exec);
    trace.push_back(summarize(population, gen));
  }
  return trace;
}

} // namespace meta_ea
