#include "meta_ea/chromosome.hpp"

#include "meta_ea/errors.hpp"

#include <algorithm>
#include <cctype>

namespace meta_ea {

std::string_view to_string(GeneKind k) noexcept
{
  switch (k) {
  case GeneKind::Initialize: return "Initialize";
  case GeneKind::Mutate: return "Mutate";
  case GeneKind::Select: return "Select";
  case GeneKind::Crossover: return "Crossover";
  }
  return "?";
}

std::optional<GeneKind> parse_gene_kind(std::string_view s) noexcept
{
  auto iequal = [](std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
             return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
           });
  };
  for (auto k : all_gene_kinds) {
    if (iequal(s, to_string(k)))
      return k;
  }
  return std::nullopt;
}

bool valid_at(const Gene& g, std::size_t position) noexcept
{
  const std::size_t n = arity(g.kind);
  for (std::size_t i = 0; i < n; ++i) {
    if (g.args[i] >= position)
      return false;
  }
  for (std::size_t i = n; i < g.args.size(); ++i) {
    if (g.args[i] != 0)
      return false;
  }
  return true;
}

std::optional<std::string> check_invariants(const MepChromosome& c)
{
  if (c.genes.empty())
    return "chromosome is empty";
  if (c.genes[0].kind != GeneKind::Initialize)
    return "first gene is not Initialize";
  for (std::size_t i = 0; i < c.genes.size(); ++i) {
    if (!valid_at(c.genes[i], i))
      return "gene " + std::to_string(i + 1) + " references a position at or after itself";
  }
  return std::nullopt;
}

bool is_valid(const MepChromosome& c) { return !check_invariants(c).has_value(); }

void MacroConfig::validate() const
{
  auto positive = [](std::size_t v, const char* name) {
    if (v == 0)
      throw ConfigError(std::string(name) + " must be at least 1");
  };
  positive(population_size, "population_size");
  positive(code_length, "code_length");
  positive(mutations_per_chromosome, "mutations_per_chromosome");
  positive(runs_per_eval, "runs_per_eval");
  positive(dimension, "dimension");
  positive(macro_runs, "macro_runs");
  // binary tournaments draw two distinct members
  if (population_size < 2)
    throw ConfigError("population_size must be at least 2");
  if (!(crossover_probability >= 0.0 && crossover_probability <= 1.0))
    throw ConfigError("crossover_probability must lie in [0, 1]");
  if (objective_name.empty())
    throw ConfigError("objective must be named");
}

Gene random_gene(std::size_t position, Rng& rng)
{
  if (position == 0)
    return Gene::initialize();

  std::uniform_int_distribution<std::size_t> kind_dist(0, all_gene_kinds.size() - 1);
  std::uniform_int_distribution<std::uint32_t> arg_dist(0, static_cast<std::uint32_t>(position - 1));
  Gene g;
  g.kind = all_gene_kinds[kind_dist(rng)];
  for (std::size_t i = 0; i < arity(g.kind); ++i)
    g.args[i] = arg_dist(rng);
  return g;
}

MepChromosome random_chromosome(std::size_t code_length, Rng& rng)
{
  MepChromosome c;
  c.genes.reserve(code_length);
  for (std::size_t i = 0; i < code_length; ++i)
    c.genes.push_back(random_gene(i, rng));
  return c;
}

std::pair<MepChromosome, MepChromosome> uniform_crossover(const MepChromosome& a, const MepChromosome& b,
                                                          Rng& rng)
{
  if (a.size() != b.size())
    throw ConfigError("uniform_crossover: parent lengths differ (" + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()) + ")");
  MepChromosome first{a.genes, std::nullopt};
  MepChromosome second{b.genes, std::nullopt};
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (coin(rng))
      std::swap(first.genes[i], second.genes[i]);
  }
  return {std::move(first), std::move(second)};
}

MepChromosome mutate_chromosome(MepChromosome c, std::size_t k, Rng& rng)
{
  if (k == 0 || c.genes.empty())
    return c;
  c.cached_eval.reset();
  std::uniform_int_distribution<std::size_t> pos_dist(0, c.size() - 1);
  for (std::size_t m = 0; m < k; ++m) {
    const std::size_t p = pos_dist(rng);
    c.genes[p] = random_gene(p, rng);
  }
  return c;
}

} // namespace meta_ea
