#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tspga/city.hpp"
#include "tspga/prng.hpp"
#include "tspga/route.hpp"

namespace tspga {

/// GA parameters. Defaults are the reference benchmark configuration:
/// 5 individuals, 100 generations, 90% crossover, 1% mutation, stop after
/// 20 generations without improvement.
struct GAConfig {
    std::size_t population_size = 5;
    std::size_t max_generations = 100;
    double crossover_rate = 0.90;
    double mutation_rate = 0.01;
    std::size_t stagnation_limit = 20;
    std::uint64_t seed = 0;

    /// Throws ConfigError on population_size < 2, rates outside [0,1],
    /// max_generations or stagnation_limit of zero.
    void validate() const;

    friend bool operator==(const GAConfig&, const GAConfig&) = default;
};

/// Offspring attempts per slot before build_candidates admits duplicates.
inline constexpr std::size_t kCandidateAttemptsPerSlot = 100;

struct GenerationRecord {
    std::size_t generation = 0;
    double population_best = 0.0;
    double best_so_far = 0.0;
    std::uint64_t seed = 0;  // counter after the generation was built

    friend bool operator==(const GenerationRecord&, const GenerationRecord&) = default;
};

/// Everything a run reports. This is the unit of cross-implementation
/// comparison; elapsed_ms is the only non-deterministic field.
struct RunTrace {
    std::size_t n_cities = 0;
    std::vector<GenerationRecord> per_generation;
    double best_fitness = 0.0;
    std::size_t best_generation = 0;
    std::size_t final_generation = 0;
    std::uint64_t last_seed = 0;
    double elapsed_ms = 0.0;
    Order best_order;  // in-memory only; not part of the wire document
};

/// Mutable GA state. `population` is kept sorted ascending by length
/// after every evaluate step.
struct Environment {
    Environment(CityList cities, GAConfig config);

    CityList cities;
    GAConfig config;
    std::vector<Route> population;
    std::size_t generation = 0;
    Route best;
    std::size_t best_generation = 0;
    CounterRng prng;
};

/// [identity, shuffled identity], both evaluated. Consumes n-1 draws.
/// Throws ConfigError for n < 2.
std::vector<Route> make_population(const CityList& cities, CounterRng& prng);

/// Stable ascending sort by length.
void evaluate_population(std::vector<Route>& population);

/// Builds a child gene by gene. For each slot: a coin picks the source
/// parent (A below 0.5), then one gene is drawn from that parent's genes not
/// yet placed, in parent order. A pool of one is taken without a draw.
Route crossover_routes(const Route& parent_a, const Route& parent_b,
                       const CityList& cities, CounterRng& prng);

/// Left rotation by a drawn index k in [0, n). Length is unchanged for a
/// closed tour but is re-evaluated anyway.
Route mutate_route(const Route& route, const CityList& cities, CounterRng& prng);

/// Rotation with an explicit index; the deterministic core of mutate_route.
Order rotate_left(const Order& order, std::size_t k);

/// One generation of offspring from the two best individuals. Per attempt
/// the draw order is: crossover coin, crossover draws, mutation coin,
/// mutation index. Offspring whose order is already present are discarded
/// until kCandidateAttemptsPerSlot * population_size attempts have been
/// made; after that duplicates fill the remaining slots.
std::vector<Route> build_candidates(Environment& env);

/// Replaces env.best only when the population head is strictly shorter.
void track_best(Environment& env);

bool goal_reached(const Environment& env);

/// Full run from initial population to termination. Single-threaded.
RunTrace run(const CityList& cities, const GAConfig& config);

}  // namespace tspga
