#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace meta_ea {

using Evaluator = double (*)(std::span<const double>);

/// A continuous minimization problem on the box [lower, upper]^dimension.
struct ObjectiveSpec {
  std::string name;
  std::size_t dimension = 0;
  double lower = 0.0;
  double upper = 0.0;
  Evaluator evaluator = nullptr;

  double operator()(std::span<const double> x) const { return evaluator(x); }
};

/// Griewangk's function: sum(x_i^2)/4000 - prod(cos(x_i / sqrt(i))) + 1, i from 1.
/// Throws std::domain_error on an empty vector.
double griewangk(std::span<const double> x);

/// sum(x_i^2).
double sphere(std::span<const double> x);

/// Registered objective by name with its canonical bounds.
/// Throws ConfigError (listing the known names) for an unknown name or n == 0.
ObjectiveSpec lookup(const std::string& name, std::size_t dimension);

std::vector<std::string> objective_names();

} // namespace meta_ea
