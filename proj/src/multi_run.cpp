#include "tspga/multi_run.hpp"

#include "tspga/error.hpp"

namespace tspga {

std::vector<RunTrace> run_seeds(const CityList& cities, const GAConfig& config,
                                std::span<const std::uint64_t> seeds) {
    // Validate up front: an exception escaping the parallel region terminates.
    config.validate();
    if (cities.size() < 2) throw ConfigError("a GA run needs at least 2 cities");
    std::vector<RunTrace> traces(seeds.size());
    const auto count = static_cast<std::ptrdiff_t>(seeds.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        GAConfig local = config;
        local.seed = seeds[static_cast<std::size_t>(i)];
        traces[static_cast<std::size_t>(i)] = run(cities, local);
    }
    return traces;
}

std::vector<RunTrace> run_seeds_serial(const CityList& cities, const GAConfig& config,
                                       std::span<const std::uint64_t> seeds) {
    std::vector<RunTrace> traces;
    traces.reserve(seeds.size());
    for (auto seed : seeds) {
        GAConfig local = config;
        local.seed = seed;
        traces.push_back(run(cities, local));
    }
    return traces;
}

}  // namespace tspga
