#include "meta_ea/harness.hpp"

#include "meta_ea/errors.hpp"
#include "meta_ea/objectives.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace meta_ea {

std::uint64_t macro_run_seed(std::uint64_t master_seed, std::size_t run) noexcept
{
  return derive_seed(master_seed, {stream::macro_run, run});
}

CostEstimate estimate_cost(const MacroConfig& c) noexcept
{
  CostEstimate e;
  const std::uint64_t per_run = c.population_size + 2ULL * c.population_size * c.generations;
  e.chromosome_evaluations = per_run * c.macro_runs;
  e.gene_executions = e.chromosome_evaluations * c.runs_per_eval * c.code_length;
  return e;
}

void aggregate(ExperimentResult& result)
{
  const auto& runs = result.runs;
  if (runs.empty())
    throw ConfigError("aggregate: no macro runs");
  const std::size_t len = runs.front().size();
  for (const auto& t : runs) {
    if (t.size() != len)
      throw ConfigError("aggregate: traces differ in length");
  }

  result.best_run = 0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].back().best_fitness < runs[result.best_run].back().best_fitness)
      result.best_run = r;
  }

  const double n = static_cast<double>(runs.size());
  result.best_run_fitness.assign(len, 0.0);
  result.mean_best_fitness.assign(len, 0.0);
  result.mean_operator_counts.assign(len, {});
  for (std::size_t g = 0; g < len; ++g) {
    result.best_run_fitness[g] = runs[result.best_run][g].best_fitness;
    double fit = 0.0;
    MeanOperatorCounts ops;
    for (const auto& t : runs) {
      fit += t[g].best_fitness;
      const auto& oc = t[g].best_operator_counts;
      ops.initializations += static_cast<double>(oc.initializations);
      ops.selections += static_cast<double>(oc.selections);
      ops.crossovers += static_cast<double>(oc.crossovers);
      ops.mutations += static_cast<double>(oc.mutations);
    }
    result.mean_best_fitness[g] = fit / n;
    result.mean_operator_counts[g] = {ops.initializations / n, ops.selections / n, ops.crossovers / n,
                                      ops.mutations / n};
  }
}

ExperimentResult run_experiment(const MacroConfig& config, Execution exec, const ProgressFn& on_run_done)
{
  config.validate();
  const ObjectiveSpec objective = lookup(config.objective_name, config.dimension);

  ExperimentResult result;
  result.config = config;
  result.runs.reserve(config.macro_runs);
  for (std::size_t r = 0; r < config.macro_runs; ++r) {
    result.runs.push_back(evolve(config, objective, macro_run_seed(config.master_seed, r), exec));
    if (on_run_done)
      on_run_done(r, result.runs.back());
  }
  aggregate(result);
  return result;
}

namespace {

std::string fixed6(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out)
    throw std::runtime_error("failed writing " + path.string());
}

} // namespace

std::string fitness_csv(const ExperimentResult& result)
{
  std::ostringstream os;
  os << "generation,best_run_fitness,mean_fitness\n";
  for (std::size_t g = 0; g < result.best_run_fitness.size(); ++g)
    os << g << ',' << fixed6(result.best_run_fitness[g]) << ',' << fixed6(result.mean_best_fitness[g]) << '\n';
  return os.str();
}

std::string operators_csv(const ExperimentResult& result)
{
  std::ostringstream os;
  os << "generation,initializations,selections,crossovers,mutations\n";
  for (std::size_t g = 0; g < result.mean_operator_counts.size(); ++g) {
    const auto& m = result.mean_operator_counts[g];
    os << g << ',' << fixed6(m.initializations) << ',' << fixed6(m.selections) << ',' << fixed6(m.crossovers)
       << ',' << fixed6(m.mutations) << '\n';
  }
  return os.str();
}

void write_csv(const ExperimentResult& result, const std::filesystem::path& out_dir)
{
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec)
    throw std::runtime_error("cannot create directory " + out_dir.string() + ": " + ec.message());
  write_file(out_dir / "fitness.csv", fitness_csv(result));
  write_file(out_dir / "operators.csv", operators_csv(result));
}

// ---------------------------------------------------------------------------
// config parsing

namespace {

std::string_view trim(std::string_view s)
{
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void config_fail(std::size_t line_no, const std::string& msg)
{
  throw ConfigError("config line " + std::to_string(line_no) + ": " + msg);
}

template <typename T>
T parse_integer(std::string_view v, std::size_t line_no, std::string_view key)
{
  T out{};
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    config_fail(line_no, std::string(key) + ": expected a non-negative integer, got '" + std::string(v) + "'");
  return out;
}

double parse_real(std::string_view v, std::size_t line_no, std::string_view key)
{
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    config_fail(line_no, std::string(key) + ": expected a real number, got '" + std::string(v) + "'");
  return out;
}

constexpr std::array required_keys{"population_size",   "code_length",   "generations",
                                   "crossover_probability", "mutations_per_chromosome",
                                   "runs_per_eval",     "objective",     "dimension"};
constexpr std::array optional_keys{"master_seed", "macro_runs"};

} // namespace

MacroConfig parse_config_text(std::string_view text)
{
  MacroConfig cfg;
  cfg.master_seed = 0;
  cfg.macro_runs = 1;
  std::map<std::string, std::size_t, std::less<>> seen; // key -> line

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      config_fail(line_no, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (value.empty())
      config_fail(line_no, std::string(key) + ": missing value");

    const bool known = std::ranges::find(required_keys, key) != required_keys.end() ||
                       std::ranges::find(optional_keys, key) != optional_keys.end();
    if (!known)
      config_fail(line_no, "unknown key '" + std::string(key) + "'");
    if (auto it = seen.find(key); it != seen.end())
      config_fail(line_no, "duplicate key '" + std::string(key) + "' (first set on line " +
                               std::to_string(it->second) + ")");
    seen.emplace(std::string(key), line_no);

    auto count = [&](std::size_t min) {
      const auto v = parse_integer<std::size_t>(value, line_no, key);
      if (v < min)
        config_fail(line_no, std::string(key) + " must be at least " + std::to_string(min));
      return v;
    };

    if (key == "population_size") {
      cfg.population_size = count(2);
    } else if (key == "code_length") {
      cfg.code_length = count(1);
    } else if (key == "generations") {
      cfg.generations = count(0);
    } else if (key == "crossover_probability") {
      const double p = parse_real(value, line_no, key);
      if (!(p >= 0.0 && p <= 1.0))
        config_fail(line_no, "crossover_probability must lie in [0, 1], got " + std::string(value));
      cfg.crossover_probability = p;
    } else if (key == "mutations_per_chromosome") {
      cfg.mutations_per_chromosome = count(1);
    } else if (key == "runs_per_eval") {
      cfg.runs_per_eval = count(1);
    } else if (key == "objective") {
      cfg.objective_name = std::string(value);
    } else if (key == "dimension") {
      cfg.dimension = count(1);
    } else if (key == "master_seed") {
      cfg.master_seed = parse_integer<std::uint64_t>(value, line_no, key);
    } else if (key == "macro_runs") {
      cfg.macro_runs = count(1);
    }
  }

  std::string missing;
  for (const char* k : required_keys) {
    if (!seen.contains(std::string_view(k))) {
      if (!missing.empty())
        missing += ", ";
      missing += k;
    }
  }
  if (!missing.empty())
    throw ConfigError("config is missing required keys: " + missing);

  try {
    lookup(cfg.objective_name, cfg.dimension);
  } catch (const ConfigError& e) {
    config_fail(seen.find(std::string_view("objective"))->second, e.what());
  }
  cfg.validate();
  return cfg;
}

MacroConfig parse_config(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config_text(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

} // namespace meta_ea
