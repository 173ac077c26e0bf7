#pragma once

#include "meta_ea/chromosome.hpp"
#include "meta_ea/engine.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace meta_ea {

struct MeanOperatorCounts {
  double initializations = 0.0;
  double selections = 0.0;
  double crossovers = 0.0;
  double mutations = 0.0;
};

struct ExperimentResult {
  MacroConfig config;
  std::vector<ExperimentTrace> runs;     // macro_runs x (generations + 1)
  std::size_t best_run = 0;              // lowest final best_fitness, earliest on ties
  std::vector<double> best_run_fitness;  // runs[best_run] best_fitness per generation
  std::vector<double> mean_best_fitness; // mean over runs of best_fitness per generation
  std::vector<MeanOperatorCounts> mean_operator_counts;
};

/// Seed of macro run `run` under `master_seed`.
std::uint64_t macro_run_seed(std::uint64_t master_seed, std::size_t run) noexcept;

/// Rough cost of a configuration.
struct CostEstimate {
  std::uint64_t chromosome_evaluations = 0; // per experiment
  std::uint64_t gene_executions = 0;        // upper bound on micro objective evaluations
};
CostEstimate estimate_cost(const MacroConfig& config) noexcept;

using ProgressFn = std::function<void(std::size_t run, const ExperimentTrace& trace)>;

/// Runs `macro_runs` independent evolve() calls and aggregates them.
ExperimentResult run_experiment(const MacroConfig& config, Execution exec = Execution::parallel,
                                const ProgressFn& on_run_done = {});

/// Recomputes the aggregate series from `result.runs`.
void aggregate(ExperimentResult& result);

/// fitness.csv: generation,best_run_fitness,mean_fitness
std::string fitness_csv(const ExperimentResult& result);
/// operators.csv: generation,initializations,selections,crossovers,mutations
std::string operators_csv(const ExperimentResult& result);

/// Writes both CSV files into out_dir (created if missing). Throws
/// std::runtime_error carrying the path on I/O failure.
void write_csv(const ExperimentResult& result, const std::filesystem::path& out_dir);

/// Flat "key = value" configuration. Throws ConfigError with line numbers.
MacroConfig parse_config_text(std::string_view text);
MacroConfig parse_config(const std::filesystem::path& path);

} // namespace meta_ea
