#include "meta_ea/objectives.hpp"

#include "meta_ea/errors.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace meta_ea {

double griewangk(std::span<const double> x)
{
  if (x.empty())
    throw std::domain_error("griewangk: empty input vector");
  double sum = 0.0;
  double prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * x[i];
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return sum / 4000.0 - prod + 1.0;
}

double sphere(std::span<const double> x)
{
  double sum = 0.0;
  for (double v : x)
    sum += v * v;
  return sum;
}

namespace {

struct Entry {
  const char* name;
  double lower;
  double upper;
  Evaluator evaluator;
};

constexpr std::array registry{
    Entry{"griewangk", -500.0, 500.0, &griewangk},
    Entry{"sphere", -100.0, 100.0, &sphere},
};

} // namespace

std::vector<std::string> objective_names()
{
  std::vector<std::string> names;
  for (const auto& e : registry)
    names.emplace_back(e.name);
  return names;
}

ObjectiveSpec lookup(const std::string& name, std::size_t dimension)
{
  if (dimension == 0)
    throw ConfigError("objective dimension must be at least 1");
  for (const auto& e : registry) {
    if (name == e.name)
      return ObjectiveSpec{e.name, dimension, e.lower, e.upper, e.evaluator};
  }
  std::string known;
  for (const auto& e : registry) {
    if (!known.empty())
      known += ", ";
    known += e.name;
  }
  throw ConfigError("unknown objective '" + name + "' (known: " + known + ")");
}

} // namespace meta_ea
