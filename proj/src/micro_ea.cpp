#include "meta_ea/micro_ea.hpp"

#include "meta_ea/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <omp.h>

namespace meta_ea {

std::uint64_t run_seed(std::uint64_t eval_seed, std::size_t run) noexcept
{
  return derive_seed(eval_seed, {run});
}

std::uint64_t gene_seed(std::uint64_t run_seed, std::size_t gene) noexcept
{
  return derive_seed(run_seed, {gene});
}

namespace {

void initialize_into(std::span<double> out, const ObjectiveSpec& objective, Rng& rng)
{
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double width = objective.upper - objective.lower;
  for (double& v : out)
    v = objective.lower + unit(rng) * width;
}

void crossover_into(std::span<double> out, std::span<const double> a, std::span<const double> b)
{
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = convex_alpha * a[i] + (1.0 - convex_alpha) * b[i];
}

void mutate_into(std::span<double> out, std::span<const double> in, const ObjectiveSpec& objective, Rng& rng)
{
  std::normal_distribution<double> noise(0.0, mutation_sigma);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = std::clamp(in[i] + noise(rng), objective.lower, objective.upper);
}

// Flat storage for one run: one solution slot per gene.
class SlotBuffer {
public:
  SlotBuffer(std::size_t genes, std::size_t dimension)
      : dim_(dimension), x_(genes * dimension), value_(genes)
  {
  }

  std::span<double> x(std::size_t slot) { return {x_.data() + slot * dim_, dim_}; }
  std::span<const double> x(std::size_t slot) const { return {x_.data() + slot * dim_, dim_}; }
  double& value(std::size_t slot) { return value_[slot]; }
  std::span<const double> values() const { return value_; }

private:
  std::size_t dim_;
  std::vector<double> x_;
  std::vector<double> value_;
};

void sweep(const MepChromosome& c, const ObjectiveSpec& objective, std::uint64_t run, SlotBuffer& slots)
{
  for (std::size_t g = 0; g < c.size(); ++g) {
    const Gene& gene = c.genes[g];
    auto out = slots.x(g);
    switch (gene.kind) {
    case GeneKind::Initialize: {
      Rng rng = make_rng(gene_seed(run, g));
      initialize_into(out, objective, rng);
      slots.value(g) = objective(out);
      break;
    }
    case GeneKind::Mutate: {
      Rng rng = make_rng(gene_seed(run, g));
      mutate_into(out, slots.x(gene.args[0]), objective, rng);
      slots.value(g) = objective(out);
      break;
    }
    case GeneKind::Select: {
      const std::size_t a = gene.args[0];
      const std::size_t b = gene.args[1];
      const std::size_t win = slots.value(b) < slots.value(a) ? b : a;
      std::ranges::copy(slots.x(win), out.begin());
      slots.value(g) = slots.value(win);
      break;
    }
    case GeneKind::Crossover:
      crossover_into(out, slots.x(gene.args[0]), slots.x(gene.args[1]));
      slots.value(g) = objective(out);
      break;
    }
  }
}

EvalReport finish_report(std::vector<double> sums, std::size_t runs)
{
  EvalReport report;
  report.runs = runs;
  for (double& s : sums)
    s /= static_cast<double>(runs);
  // earliest index wins ties
  report.best_gene = static_cast<std::size_t>(std::ranges::min_element(sums) - sums.begin());
  report.fitness = sums[report.best_gene];
  report.per_gene_mean = std::move(sums);
  return report;
}

void check_eval_args(const MepChromosome& c, std::size_t runs)
{
  if (runs == 0)
    throw ConfigError("evaluate: runs must be at least 1");
  if (auto err = check_invariants(c))
    throw ConfigError("evaluate: invalid chromosome: " + *err);
}

} // namespace

MicroSolution op_initialize(const ObjectiveSpec& objective, Rng& rng)
{
  MicroSolution s{std::vector<double>(objective.dimension), 0.0};
  initialize_into(s.x, objective, rng);
  s.value = objective(s.x);
  return s;
}

MicroSolution op_convex_crossover(const MicroSolution& a, const MicroSolution& b, const ObjectiveSpec& objective)
{
  if (a.x.size() != b.x.size())
    throw ConfigError("op_convex_crossover: dimension mismatch");
  MicroSolution s{std::vector<double>(a.x.size()), 0.0};
  crossover_into(s.x, a.x, b.x);
  s.value = objective(s.x);
  return s;
}

MicroSolution op_gaussian_mutation(const MicroSolution& in, const ObjectiveSpec& objective, Rng& rng)
{
  MicroSolution s{std::vector<double>(in.x.size()), 0.0};
  mutate_into(s.x, in.x, objective, rng);
  s.value = objective(s.x);
  return s;
}

const MicroSolution& op_select(const MicroSolution& a, const MicroSolution& b) noexcept
{
  return b.value < a.value ? b : a;
}

EaProgram decode(const MepChromosome& c, std::size_t position)
{
  if (position >= c.size())
    throw ConfigError("decode: position " + std::to_string(position + 1) + " outside chromosome of length " +
                      std::to_string(c.size()));

  // Arguments always point backwards, so one descending pass marks the closure.
  std::vector<char> used(position + 1, 0);
  used[position] = 1;
  for (std::size_t g = position + 1; g-- > 0;) {
    if (!used[g])
      continue;
    const Gene& gene = c.genes[g];
    for (std::size_t a = 0; a < arity(gene.kind); ++a)
      used[gene.args[a]] = 1;
  }

  std::vector<std::uint32_t> local(position + 1, 0);
  EaProgram p;
  p.source_position = position;
  for (std::size_t g = 0; g <= position; ++g) {
    if (!used[g])
      continue;
    const Gene& gene = c.genes[g];
    Instruction ins;
    ins.kind = gene.kind;
    ins.source_position = g;
    for (std::size_t a = 0; a < arity(gene.kind); ++a)
      ins.args[a] = local[gene.args[a]];
    local[g] = static_cast<std::uint32_t>(p.instructions.size());
    p.instructions.push_back(ins);
  }
  return p;
}

OperatorCounts count_operators(const EaProgram& p) noexcept
{
  OperatorCounts n;
  for (const auto& ins : p.instructions) {
    switch (ins.kind) {
    case GeneKind::Initialize: ++n.initializations; break;
    case GeneKind::Select: ++n.selections; break;
    case GeneKind::Crossover: ++n.crossovers; break;
    case GeneKind::Mutate: ++n.mutations; break;
    }
  }
  return n;
}

std::vector<MicroSolution> execute_all(const MepChromosome& c, const ObjectiveSpec& objective,
                                       std::uint64_t run)
{
  SlotBuffer slots(c.size(), objective.dimension);
  sweep(c, objective, run, slots);
  std::vector<MicroSolution> out(c.size());
  for (std::size_t g = 0; g < c.size(); ++g) {
    out[g].x.assign(slots.x(g).begin(), slots.x(g).end());
    out[g].value = slots.value(g);
  }
  return out;
}

std::vector<double> run_once(const MepChromosome& c, const ObjectiveSpec& objective, std::uint64_t run)
{
  SlotBuffer slots(c.size(), objective.dimension);
  sweep(c, objective, run, slots);
  return {slots.values().begin(), slots.values().end()};
}

EvalReport evaluate_serial(const MepChromosome& c, const ObjectiveSpec& objective, std::size_t runs,
                           std::uint64_t eval_seed)
{
  check_eval_args(c, runs);
  const std::size_t len = c.size();
  SlotBuffer slots(len, objective.dimension);
  std::vector<double> sums(len, 0.0);
  for (std::size_t r = 0; r < runs; ++r) {
    sweep(c, objective, run_seed(eval_seed, r), slots);
    auto values = slots.values();
    for (std::size_t g = 0; g < len; ++g)
      sums[g] += values[g];
  }
  return finish_report(std::move(sums), runs);
}

EvalReport evaluate_parallel(const MepChromosome& c, const ObjectiveSpec& objective, std::size_t runs,
                             std::uint64_t eval_seed)
{
  check_eval_args(c, runs);
  const std::size_t len = c.size();
  std::vector<double> rows(runs * len);

#pragma omp parallel
  {
    SlotBuffer slots(len, objective.dimension);
#pragma omp for schedule(static)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(runs); ++r) {
      sweep(c, objective, run_seed(eval_seed, static_cast<std::size_t>(r)), slots);
      std::ranges::copy(slots.values(), rows.begin() + r * static_cast<std::ptrdiff_t>(len));
    }
  }

  // Same summation order as the serial path: run 0, 1, ... per gene.
  std::vector<double> sums(len, 0.0);
  for (std::size_t r = 0; r < runs; ++r) {
    const double* row = rows.data() + r * len;
    for (std::size_t g = 0; g < len; ++g)
      sums[g] += row[g];
  }
  return finish_report(std::move(sums), runs);
}

EvalReport evaluate(const MepChromosome& c, const ObjectiveSpec& objective, std::size_t runs,
                    std::uint64_t eval_seed, Execution exec)
{
  return exec == Execution::serial ? evaluate_serial(c, objective, runs, eval_seed)
                                   : evaluate_parallel(c, objective, runs, eval_seed);
}

} // namespace meta_ea
