// meta-ea: evolve, decode, evaluate and probe evolved evolutionary algorithms.

#include "meta_ea/chromosome_io.hpp"
#include "meta_ea/errors.hpp"
#include "meta_ea/harness.hpp"
#include "meta_ea/micro_ea.hpp"
#include "meta_ea/objectives.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <omp.h>
#include <string>
#include <vector>

using namespace meta_ea;

namespace {

void print_counts(const OperatorCounts& n)
{
  std::cout << "initializations=" << n.initializations << " selections=" << n.selections
            << " crossovers=" << n.crossovers << " mutations=" << n.mutations << " total=" << n.total() << '\n';
}

void print_program(const MepChromosome& c, std::size_t position)
{
  const EaProgram p = decode(c, position);
  std::cout << format_program(p);
  print_counts(count_operators(p));
}

Execution apply_threads(int threads)
{
  if (threads <= 0)
    return Execution::parallel;
  omp_set_num_threads(threads);
  return threads == 1 ? Execution::serial : Execution::parallel;
}

std::string g17(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Meta-evolution of evolutionary algorithms encoded as MEP chromosomes"};
  app.require_subcommand(1);

  // evolve
  auto* evolve_cmd = app.add_subcommand("evolve", "Run an experiment and write fitness.csv / operators.csv");
  std::string config_path, out_dir;
  int threads = 0;
  bool quiet = false;
  evolve_cmd->add_option("config", config_path, "Experiment config (key = value)")->required();
  evolve_cmd->add_option("--out", out_dir, "Output directory")->required();
  evolve_cmd->add_option("--threads", threads, "Evaluation threads (1 = serial reference path, 0 = default)");
  evolve_cmd->add_flag("--quiet", quiet, "No progress output");

  // decode
  auto* decode_cmd = app.add_subcommand("decode", "Print the EA(s) encoded in a chromosome file");
  std::string chromosome_path;
  std::size_t position = 0;
  decode_cmd->add_option("chromosome", chromosome_path, "Chromosome text file")->required();
  auto* position_opt =
      decode_cmd->add_option("--position", position, "1-based gene position (default: all)")->check(CLI::PositiveNumber);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a chromosome file by repeated runs");
  std::string objective_name = "griewangk";
  std::size_t dim = 5, runs = 200;
  std::uint64_t seed = 0;
  eval_cmd->add_option("chromosome", chromosome_path, "Chromosome text file")->required();
  eval_cmd->add_option("--objective", objective_name, "Objective name")->capture_default_str();
  eval_cmd->add_option("--dim", dim, "Problem dimension")->capture_default_str()->check(CLI::PositiveNumber);
  eval_cmd->add_option("--runs", runs, "Runs per evaluation")->capture_default_str()->check(CLI::PositiveNumber);
  eval_cmd->add_option("--seed", seed, "Evaluation seed")->capture_default_str();
  eval_cmd->add_option("--threads", threads, "Evaluation threads (1 = serial reference path)");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Evaluate an objective at one point");
  std::vector<double> point;
  bench_cmd->add_option("--objective", objective_name, "Objective name")->capture_default_str();
  bench_cmd->add_option("--dim", dim, "Problem dimension")->capture_default_str()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--point", point, "Comma-separated coordinates")->required()->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    if (*evolve_cmd) {
      const MacroConfig cfg = parse_config(config_path);
      const Execution exec = apply_threads(threads);
      const CostEstimate cost = estimate_cost(cfg);
      if (!quiet) {
        std::cerr << "estimated cost: " << cost.chromosome_evaluations << " chromosome evaluations, up to "
                  << cost.gene_executions << " micro objective evaluations\n";
      }
      const auto result = run_experiment(cfg, exec, [&](std::size_t r, const ExperimentTrace& t) {
        if (!quiet)
          std::cerr << "macro run " << r + 1 << "/" << cfg.macro_runs << ": best fitness "
                    << t.front().best_fitness << " -> " << t.back().best_fitness << '\n';
      });
      write_csv(result, out_dir);
      if (!quiet)
        std::cerr << "wrote " << out_dir << "/fitness.csv and " << out_dir << "/operators.csv\n";
    } else if (*decode_cmd) {
      const MepChromosome c = load_chromosome(chromosome_path);
      if (*position_opt) {
        if (position > c.size())
          throw ConfigError("position " + std::to_string(position) + " exceeds chromosome length " +
                            std::to_string(c.size()));
        print_program(c, position - 1);
      } else {
        for (std::size_t p = 0; p < c.size(); ++p) {
          std::cout << "# EA " << p + 1 << '\n';
          print_program(c, p);
        }
      }
    } else if (*eval_cmd) {
      const MepChromosome c = load_chromosome(chromosome_path);
      const ObjectiveSpec objective = lookup(objective_name, dim);
      const EvalReport report = evaluate(c, objective, runs, seed, apply_threads(threads));
      std::cout << "fitness = " << g17(report.fitness) << '\n'
                << "best_gene = " << report.best_gene + 1 << '\n'
                << "runs = " << report.runs << '\n'
                << "per_gene_mean =";
      for (double v : report.per_gene_mean)
        std::cout << ' ' << g17(v);
      std::cout << "\n# best EA\n";
      print_program(c, report.best_gene);
    } else if (*bench_cmd) {
      const ObjectiveSpec objective = lookup(objective_name, dim);
      if (point.size() != dim)
        throw ConfigError("--point has " + std::to_string(point.size()) + " coordinates, expected " +
                          std::to_string(dim));
      std::cout << g17(objective(point)) << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
