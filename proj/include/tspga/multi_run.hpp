#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tspga/engine.hpp"

namespace tspga {

/// One independent run per seed; `config.seed` is overridden. Runs are
/// spread over OpenMP threads. Output order follows `seeds`.
std::vector<RunTrace> run_seeds(const CityList& cities, const GAConfig& config,
                                std::span<const std::uint64_t> seeds);

/// Sequential reference for run_seeds.
std::vector<RunTrace> run_seeds_serial(const CityList& cities, const GAConfig& config,
                                       std::span<const std::uint64_t> seeds);

}  // namespace tspga
