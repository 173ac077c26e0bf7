#pragma once

// Line-oriented chromosome text, one gene per line with 1-based labels:
//
//   1: Initialize
//   3: Mutate 1
//   4: Select 1 3
//   5: Crossover 2 4
//
// Labels must run 1, 2, 3, ... Argument separators may be spaces or commas.
// Blank lines and lines starting with '#' are ignored.

#include "meta_ea/chromosome.hpp"
#include "meta_ea/micro_ea.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace meta_ea {

std::string format_chromosome(const MepChromosome& c);

/// Program listing with closure-local 1-based labels.
std::string format_program(const EaProgram& p);

/// Throws ParseError with the offending line number.
MepChromosome parse_chromosome(std::string_view text);

MepChromosome load_chromosome(const std::filesystem::path& path);

} // namespace meta_ea
