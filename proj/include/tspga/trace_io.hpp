#pragma once

#include <string>
#include <string_view>

#include "tspga/engine.hpp"

namespace tspga {

/// JSON trace document. Lengths are written with exactly 9 decimals so
/// independent implementations produce identical text:
///
///   {"n_cities": 5, "best_fitness": 30.305472538, "best_generation": 3,
///    "final_generation": 24, "last_seed": 612, "elapsed_ms": 0.041,
///    "per_generation": [{"generation": 0, "population_best": ...,
///                        "best_so_far": ..., "seed": 4}, ...]}
///
/// With `include_timing` false the elapsed_ms member is omitted.
std::string trace_to_document(const RunTrace& trace, bool include_timing = true);

/// Throws ParseError on malformed JSON or missing/mistyped members.
/// A missing elapsed_ms reads as 0.
RunTrace trace_from_document(std::string_view text);

/// Run configuration document: keys population_size, max_generations,
/// crossover_rate, mutation_rate, stagnation_limit, seed. Missing keys take
/// the defaults; unknown keys are rejected.
std::string config_to_document(const GAConfig& config);
GAConfig config_from_document(std::string_view text);

}  // namespace tspga
