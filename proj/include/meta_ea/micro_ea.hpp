#pragma once

// Semantics of the EAs encoded in a chromosome: decoding one position into a
// standalone program, executing every encoded EA in a single forward sweep,
// and the repeated-run fitness used at the macro level.
//
// Randomness is addressed by coordinates, not consumed from a shared stream:
// run r of an evaluation seeded with s uses run_seed(s, r), and gene g within
// that run draws only from gene_seed(run_seed, g). Executing a decoded program
// on its own therefore reproduces the forward sweep bit for bit.

#include "meta_ea/chromosome.hpp"
#include "meta_ea/objectives.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace meta_ea {

inline constexpr double convex_alpha = 0.5;
inline constexpr double mutation_sigma = 0.5;

struct MicroSolution {
  std::vector<double> x;
  double value = 0.0;
};

struct Instruction {
  GeneKind kind = GeneKind::Initialize;
  std::array<std::uint32_t, 2> args{0, 0}; // program-local, 0-based
  std::size_t source_position = 0;         // gene index in the chromosome

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

struct EaProgram {
  std::vector<Instruction> instructions;
  std::size_t source_position = 0;

  std::size_t size() const noexcept { return instructions.size(); }
};

struct OperatorCounts {
  std::size_t initializations = 0;
  std::size_t selections = 0;
  std::size_t crossovers = 0;
  std::size_t mutations = 0;

  std::size_t total() const noexcept { return initializations + selections + crossovers + mutations; }
  friend bool operator==(const OperatorCounts&, const OperatorCounts&) = default;
};

enum class Execution { serial, parallel };

std::uint64_t run_seed(std::uint64_t eval_seed, std::size_t run) noexcept;
std::uint64_t gene_seed(std::uint64_t run_seed, std::size_t gene) noexcept;

// Operators. Each of initialize / crossover / mutation consumes exactly one
// objective evaluation; select consumes none.
MicroSolution op_initialize(const ObjectiveSpec& objective, Rng& rng);
MicroSolution op_convex_crossover(const MicroSolution& a, const MicroSolution& b, const ObjectiveSpec& objective);
MicroSolution op_gaussian_mutation(const MicroSolution& s, const ObjectiveSpec& objective, Rng& rng);
/// Lower value wins; ties go to `a`.
const MicroSolution& op_select(const MicroSolution& a, const MicroSolution& b) noexcept;

/// The EA rooted at `position`: its dependency closure in increasing gene order
/// with arguments renumbered to closure-local indices.
EaProgram decode(const MepChromosome& c, std::size_t position);

OperatorCounts count_operators(const EaProgram& p) noexcept;

/// Executes every gene once in index order. Slot i holds gene i's solution.
std::vector<MicroSolution> execute_all(const MepChromosome& c, const ObjectiveSpec& objective,
                                       std::uint64_t run_seed);

/// Objective value of every gene's solution for one run.
std::vector<double> run_once(const MepChromosome& c, const ObjectiveSpec& objective, std::uint64_t run_seed);

/// Runs all encoded EAs `runs` times, averages per gene, and takes the best gene.
/// Both execution modes produce bit-identical reports.
EvalReport evaluate(const MepChromosome& c, const ObjectiveSpec& objective, std::size_t runs,
                    std::uint64_t eval_seed, Execution exec = Execution::parallel);

/// Reference implementation: runs executed one after another.
EvalReport evaluate_serial(const MepChromosome& c, const ObjectiveSpec& objective, std::size_t runs,
                           std::uint64_t eval_seed);

/// OpenMP over runs; per-run rows are reduced in run order afterwards.
EvalReport evaluate_parallel(const MepChromosome& c, const ObjectiveSpec& objective, std::size_t runs,
                             std::uint64_t eval_seed);

} // namespace meta_ea
