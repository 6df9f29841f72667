#pragma once

#include <string>
#include <string_view>

#include "gdm/population.hpp"

namespace gdm {

/// Renders the population CSV: UTF-8, header `x1,...,xn`, one individual per
/// line, 17-significant-digit decimals (round-trips doubles exactly). The
/// landscape is never embedded.
std::string population_csv(const Population& population);

/// Parses the CSV format emitted by population_csv. Throws ParseError with a
/// line number on malformed input, header arity mismatch against the
/// landscape, or an empty data section.
Population parse_population_csv(std::string_view text, const Landscape& landscape);

void save_population(const Population& population, const std::string& path);
Population load_population(const std::string& path, const Landscape& landscape);

} // namespace gdm
