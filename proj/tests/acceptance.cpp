// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "meta_ea/chromosome_io.hpp"
#include "meta_ea/engine.hpp"
#include "meta_ea/harness.hpp"
#include "meta_ea/micro_ea.hpp"
#include "meta_ea/objectives.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace meta_ea;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> check;
};

std::string slurp(const fs::path& p)
{
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string fmt(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome decode_oracle()
{
  using K = GeneKind;
  struct Row {
    K kind;
    std::vector<std::uint32_t> args; // 1-based local labels
  };
  // Programs read off the eight-gene chromosome, one per position.
  const std::vector<std::vector<Row>> expected{
      {{K::Initialize, {}}},
      {{K::Initialize, {}}},
      {{K::Initialize, {}}, {K::Mutate, {1}}},
      {{K::Initialize, {}}, {K::Mutate, {1}}, {K::Select, {1, 2}}},
      {{K::Initialize, {}}, {K::Initialize, {}}, {K::Mutate, {1}}, {K::Select, {1, 3}}, {K::Crossover, {2, 4}}},
      {{K::Initialize, {}}, {K::Mutate, {1}}, {K::Select, {1, 2}}, {K::Mutate, {3}}},
      {{K::Initialize, {}},
       {K::Initialize, {}},
       {K::Mutate, {1}},
       {K::Select, {1, 3}},
       {K::Crossover, {2, 4}},
       {K::Mutate, {5}}},
      {{K::Initialize, {}},
       {K::Initialize, {}},
       {K::Mutate, {1}},
       {K::Select, {1, 3}},
       {K::Mutate, {4}},
       {K::Crossover, {2, 5}}},
  };

  const MepChromosome c = load_chromosome(fs::path(META_EA_FIXTURE_DIR) / "chromosome_c.txt");
  if (!(c == testing::example_chromosome()))
    return {false, "fixture does not parse to the example chromosome"};
  for (std::size_t p = 0; p < expected.size(); ++p) {
    const EaProgram prog = decode(c, p);
    if (prog.size() != expected[p].size())
      return {false, "EA" + std::to_string(p + 1) + ": wrong length"};
    for (std::size_t i = 0; i < prog.size(); ++i) {
      const auto& ins = prog.instructions[i];
      const auto& want = expected[p][i];
      if (ins.kind != want.kind || arity(ins.kind) != want.args.size())
        return {false, "EA" + std::to_string(p + 1) + ": instruction " + std::to_string(i + 1) + " kind"};
      for (std::size_t a = 0; a < want.args.size(); ++a) {
        if (ins.args[a] + 1 != want.args[a])
          return {false, "EA" + std::to_string(p + 1) + ": instruction " + std::to_string(i + 1) + " args"};
      }
    }
  }
  return {true, "8/8 programs match"};
}

Outcome griewangk_anchors()
{
  const double origin = griewangk(std::vector<double>(5, 0.0));
  const double corner = griewangk(std::vector<double>(5, 500.0));
  const bool ok = origin == 0.0 && corner >= 312.0 && corner <= 314.0;
  return {ok, "f(0)=" + fmt(origin) + " f(500^5)=" + fmt(corner)};
}

Outcome decode_run_equivalence()
{
  const auto g = lookup("griewangk", 5);
  Rng rng = make_rng(0xac3);
  std::size_t positions = 0;
  for (int t = 0; t < 500; ++t) {
    const auto c = random_chromosome(1 + static_cast<std::size_t>(t) % 16, rng);
    const std::uint64_t run = run_seed(rng(), static_cast<std::size_t>(t));
    const auto values = run_once(c, g, run);
    for (std::size_t p = 0; p < c.size(); ++p, ++positions) {
      const auto standalone = testing::execute_standalone(decode(c, p), g, run);
      if (standalone.back() != values[p])
        return {false, "chromosome " + std::to_string(t) + " position " + std::to_string(p + 1) + " differs"};
    }
  }
  return {true, "500 chromosomes, " + std::to_string(positions) + " positions, exact"};
}

Outcome validity_closure()
{
  Rng rng = make_rng(0xac4);
  std::size_t violations = 0;
  for (int t = 0; t < 10000; ++t) {
    const std::size_t len = 1 + static_cast<std::size_t>(t) % 64;
    const auto a = random_chromosome(len, rng);
    const auto b = random_chromosome(len, rng);
    violations += !is_valid(a) + !is_valid(b) + (a.size() != len);
    const auto [x, y] = uniform_crossover(a, b, rng);
    violations += !is_valid(x) + !is_valid(y);
    violations += !is_valid(mutate_chromosome(x, 5, rng));
  }
  return {violations == 0, std::to_string(violations) + " violations in 3 x 10^4 applications"};
}

ExperimentResult& desk_result()
{
  static ExperimentResult result = run_experiment(parse_config(fs::path(META_EA_FIXTURE_DIR) / "desk.cfg"));
  return result;
}

Outcome desk_experiment()
{
  const auto& r = desk_result();
  const auto& cfg = r.config;
  if (cfg.population_size != 20 || cfg.code_length != 100 || cfg.generations != 30 || cfg.runs_per_eval != 20 ||
      cfg.dimension != 5 || cfg.macro_runs != 5 || cfg.objective_name != "griewangk")
    return {false, "desk config does not match the required parameters"};

  for (std::size_t k = 0; k < r.runs.size(); ++k) {
    for (std::size_t g = 1; g < r.runs[k].size(); ++g) {
      if (r.runs[k][g].best_fitness > r.runs[k][g - 1].best_fitness)
        return {false, "run " + std::to_string(k) + " best fitness increased at generation " + std::to_string(g)};
    }
  }
  const double first = r.mean_best_fitness.front();
  const double last = r.mean_best_fitness.back();
  const double reduction = 1.0 - last / first;
  return {reduction >= 0.30,
          "mean best " + fmt(first) + " -> " + fmt(last) + " (" + fmt(100.0 * reduction) + "% lower)"};
}

Outcome random_ea_anchor()
{
  const auto g = lookup("griewangk", 5);
  const MepChromosome one{{Gene::initialize()}};
  const std::uint64_t seed = 0xac6;
  const auto report = evaluate(one, g, 200, seed);
  const double mc = testing::initialize_only_mean(g, 200, seed);
  const double worst = griewangk(std::vector<double>(5, 500.0));
  // uniform points on the box average roughly 105 (= 5 * 500^2 / 3 / 4000 + 1)
  const bool ok = report.fitness == mc && report.fitness < 0.5 * worst;
  return {ok, "fitness=" + fmt(report.fitness) + " monte-carlo=" + fmt(mc) + " worst=" + fmt(worst)};
}

Outcome cli_determinism()
{
  const fs::path base = fs::temp_directory_path() / "meta_ea_acceptance_determinism";
  fs::remove_all(base);
  const std::string cfg = (fs::path(META_EA_FIXTURE_DIR) / "desk.cfg").string();
  auto invoke = [&](const std::string& dir, int threads) {
    const std::string cmd = std::string("\"") + META_EA_CLI + "\" evolve \"" + cfg + "\" --out \"" +
                            (base / dir).string() + "\" --quiet --threads " + std::to_string(threads);
    return std::system(cmd.c_str());
  };
  if (invoke("serial", 1) != 0 || invoke("parallel", 4) != 0)
    return {false, "evolve exited nonzero"};

  bool same = true;
  for (const char* f : {"fitness.csv", "operators.csv"}) {
    const auto a = slurp(base / "serial" / f);
    const auto b = slurp(base / "parallel" / f);
    same = same && !a.empty() && a == b;
  }
  fs::remove_all(base);
  return {same, same ? "fitness.csv and operators.csv byte-identical (1 vs 4 threads)" : "outputs differ"};
}

Outcome operator_consistency()
{
  const auto& r = desk_result();
  std::size_t records = 0;
  for (const auto& trace : r.runs) {
    for (const auto& rec : trace) {
      ++records;
      std::size_t init = 0, sel = 0, cx = 0, mut = 0;
      for (const auto& ins : rec.best_program.instructions) {
        init += ins.kind == GeneKind::Initialize;
        sel += ins.kind == GeneKind::Select;
        cx += ins.kind == GeneKind::Crossover;
        mut += ins.kind == GeneKind::Mutate;
      }
      const auto& oc = rec.best_operator_counts;
      if (oc.total() != rec.best_program.size() || oc.initializations != init || oc.selections != sel ||
          oc.crossovers != cx || oc.mutations != mut)
        return {false, "generation " + std::to_string(rec.generation) + " counts disagree"};
      if (rec.best_program.source_position != rec.best_gene_index)
        return {false, "record program is not rooted at the best gene"};
    }
  }
  // the emitted CSV rows are the per-generation means of these counts
  const std::string csv = operators_csv(r);
  const std::size_t rows = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) - 1;
  const bool ok = rows == r.config.generations + 1;
  return {ok, std::to_string(records) + " records consistent, " + std::to_string(rows) + " CSV rows"};
}

} // namespace

int main()
{
  const std::vector<Criterion> criteria{
      {1, "decode oracle for the eight-gene example", 1.0, decode_oracle},
      {2, "griewangk anchors", 1.0, griewangk_anchors},
      {3, "decode/run equivalence", 30.0, decode_run_equivalence},
      {4, "validity closure", 30.0, validity_closure},
      {5, "desk-scale experiment", 300.0, desk_experiment},
      {6, "random-EA sanity anchor", 1.0, random_ea_anchor},
      {7, "CLI determinism across thread counts", 120.0, cli_determinism},
      {8, "operator-count consistency", 300.0, operator_consistency},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail += " [over time budget " + fmt(c.budget_seconds) + " s]";
    }
    failed += !o.pass;
    std::printf("[%s] AC%d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
