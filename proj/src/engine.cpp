#include "tspga/engine.hpp"

#include <algorithm>
#include <chrono>

#include "tspga/error.hpp"

namespace tspga {

void GAConfig::validate() const {
    if (population_size < 2) throw ConfigError("population_size must be >= 2");
    if (max_generations < 1) throw ConfigError("max_generations must be >= 1");
    if (stagnation_limit < 1) throw ConfigError("stagnation_limit must be >= 1");
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0))
        throw ConfigError("crossover_rate must lie in [0, 1]");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0))
        throw ConfigError("mutation_rate must lie in [0, 1]");
}

Environment::Environment(CityList cities_in, GAConfig config_in)
    : cities(std::move(cities_in)), config(config_in), prng(config_in.seed) {
    config.validate();
    if (cities.size() < 2) throw ConfigError("a GA run needs at least 2 cities");
}

std::vector<Route> make_population(const CityList& cities, CounterRng& prng) {
    if (cities.size() < 2) throw ConfigError("make_population needs at least 2 cities");
    Order a = identity_order(cities.size());
    Order b = a;
    shuffle(std::span<std::size_t>(b), prng);
    std::vector<Route> pop;
    pop.push_back(make_route(std::move(a), cities));
    pop.push_back(make_route(std::move(b), cities));
    return pop;
}

void evaluate_population(std::vector<Route>& population) {
    std::stable_sort(population.begin(), population.end(),
                     [](const Route& l, const Route& r) { return l.length < r.length; });
}

Route crossover_routes(const Route& parent_a, const Route& parent_b, const CityList& cities,
                       CounterRng& prng) {
    const std::size_t n = cities.size();
    if (!is_permutation_of_n(parent_a.order, n) || !is_permutation_of_n(parent_b.order, n))
        throw ContractError("crossover parents must be permutations over the same cities");

    Order child;
    child.reserve(n);
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> pool;
    pool.reserve(n);
    while (child.size() < n) {
        const Order& source = prng.next_float() < 0.5 ? parent_a.order : parent_b.order;
        pool.clear();
        for (auto gene : source)
            if (!placed[gene]) pool.push_back(gene);
        const std::size_t pick = pool.size() == 1 ? 0 : static_cast<std::size_t>(prng.next_int(pool.size()));
        placed[pool[pick]] = true;
        child.push_back(pool[pick]);
    }
    return make_route(std::move(child), cities);
}

Order rotate_left(const Order& order, std::size_t k) {
    if (k >= order.size()) throw ContractError("rotation index out of range");
    Order out(order);
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k), out.end());
    return out;
}

Route mutate_route(const Route& route, const CityList& cities, CounterRng& prng) {
    if (route.order.size() < 2) throw ContractError("mutation needs at least 2 genes");
    const auto k = static_cast<std::size_t>(prng.next_int(route.order.size()));
    return make_route(rotate_left(route.order, k), cities);
}

std::vector<Route> build_candidates(Environment& env) {
    if (env.population.size() < 2) throw ContractError("build_candidates needs two parents");
    const Route& parent_a = env.population[0];
    const Route& parent_b = env.population[1];
    const std::size_t target = env.config.population_size;
    const std::size_t attempt_cap = kCandidateAttemptsPerSlot * target;

    std::vector<Route> candidates;
    candidates.reserve(target);
    for (std::size_t attempt = 1; candidates.size() < target; ++attempt) {
        Route child = env.prng.next_float() < env.config.crossover_rate
                          ? crossover_routes(parent_a, parent_b, env.cities, env.prng)
                          : parent_a;
        if (env.prng.next_float() < env.config.mutation_rate)
            child = mutate_route(child, env.cities, env.prng);
        child.length = tour_length(child.order, env.cities);

        const bool duplicate = std::any_of(candidates.begin(), candidates.end(),
                                           [&](const Route& c) { return c.order == child.order; });
        if (!duplicate || attempt > attempt_cap) candidates.push_back(std::move(child));
    }
    return candidates;
}

void track_best(Environment& env) {
    const Route& head = env.population.front();
    if (env.best.order.empty() || head.length < env.best.length) {
        env.best = head;
        env.best_generation = env.generation;
    }
}

bool goal_reached(const Environment& env) {
    return env.generation >= env.config.max_generations ||
           env.generation - env.best_generation > env.config.stagnation_limit;
}

RunTrace run(const CityList& cities, const GAConfig& config) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();

    Environment env(cities, config);
    env.population = make_population(env.cities, env.prng);
    evaluate_population(env.population);
    track_best(env);

    RunTrace trace;
    trace.n_cities = cities.size();
    trace.per_generation.reserve(config.max_generations + 1);
    auto record = [&] {
        trace.per_generation.push_back(
            {env.generation, env.population.front().length, env.best.length, env.prng.seed()});
    };
    record();

    while (!goal_reached(env)) {
        ++env.generation;
        env.population = build_candidates(env);
        evaluate_population(env.population);
        track_best(env);
        record();
    }

    const auto stop = clock::now();
    trace.best_fitness = env.best.length;
    trace.best_generation = env.best_generation;
    trace.final_generation = env.generation;
    trace.last_seed = env.prng.seed();
    trace.best_order = env.best.order;
    trace.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return trace;
}

}  // namespace tspga
