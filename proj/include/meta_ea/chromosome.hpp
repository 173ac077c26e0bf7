#pragma once

#include "meta_ea/rng.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace meta_ea {

/// Micro-level EA instructions. Initialize is the only terminal.
enum class GeneKind : std::uint8_t { Initialize, Mutate, Select, Crossover };

inline constexpr std::array all_gene_kinds{GeneKind::Initialize, GeneKind::Mutate, GeneKind::Select,
                                           GeneKind::Crossover};

constexpr std::size_t arity(GeneKind k) noexcept
{
  switch (k) {
  case GeneKind::Initialize: return 0;
  case GeneKind::Mutate: return 1;
  case GeneKind::Select:
  case GeneKind::Crossover: return 2;
  }
  return 0;
}

std::string_view to_string(GeneKind k) noexcept;
std::optional<GeneKind> parse_gene_kind(std::string_view s) noexcept;

/// One instruction. Only the first arity(kind) entries of `args` are meaningful;
/// unused entries are kept at zero so that equality is structural.
struct Gene {
  GeneKind kind = GeneKind::Initialize;
  std::array<std::uint32_t, 2> args{0, 0};

  static Gene initialize() { return {}; }
  static Gene mutate(std::uint32_t a) { return {GeneKind::Mutate, {a, 0}}; }
  static Gene select(std::uint32_t a, std::uint32_t b) { return {GeneKind::Select, {a, b}}; }
  static Gene crossover(std::uint32_t a, std::uint32_t b) { return {GeneKind::Crossover, {a, b}}; }

  friend bool operator==(const Gene&, const Gene&) = default;
};

/// True when every argument refers to a strictly lower position.
bool valid_at(const Gene& g, std::size_t position) noexcept;

/// Result of running every EA encoded in a chromosome R times.
struct EvalReport {
  std::vector<double> per_gene_mean;
  std::size_t best_gene = 0;
  double fitness = 0.0;
  std::size_t runs = 0;
};

struct MepChromosome {
  std::vector<Gene> genes;
  std::optional<EvalReport> cached_eval;

  std::size_t size() const noexcept { return genes.size(); }
  double fitness() const { return cached_eval.value().fitness; }

  // Structural equality; the cached evaluation is not part of identity.
  friend bool operator==(const MepChromosome& a, const MepChromosome& b) { return a.genes == b.genes; }
};

/// Empty on success, otherwise a description of the first violation.
std::optional<std::string> check_invariants(const MepChromosome& c);
bool is_valid(const MepChromosome& c);

struct MacroConfig {
  std::size_t population_size = 100;
  std::size_t code_length = 3000;
  std::size_t generations = 100;
  double crossover_probability = 0.7;
  std::size_t mutations_per_chromosome = 5;
  std::size_t runs_per_eval = 200;
  std::string objective_name = "griewangk";
  std::size_t dimension = 5;
  std::uint64_t master_seed = 0;
  std::size_t macro_runs = 10;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// A gene that is valid at `position`; position 0 always yields Initialize.
Gene random_gene(std::size_t position, Rng& rng);

MepChromosome random_chromosome(std::size_t code_length, Rng& rng);
inline MepChromosome random_chromosome(const MacroConfig& config, Rng& rng)
{
  return random_chromosome(config.code_length, rng);
}

/// Per-position fair-coin swap. Throws ConfigError on length mismatch.
std::pair<MepChromosome, MepChromosome> uniform_crossover(const MepChromosome& a, const MepChromosome& b,
                                                          Rng& rng);

/// Regenerates `k` positions drawn uniformly with replacement.
MepChromosome mutate_chromosome(MepChromosome c, std::size_t k, Rng& rng);

} // namespace meta_ea
