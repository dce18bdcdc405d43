#include "tspga/trace_io.hpp"

#include <fmt/format.h>

#include <json.hpp>

#include "tspga/error.hpp"

namespace tspga {
namespace {

using nlohmann::json;

const json& member(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("missing member '") + key + "'");
    return *it;
}

std::uint64_t read_unsigned(const json& obj, const char* key) {
    const json& v = member(obj, key);
    if (!v.is_number_unsigned())
        throw ParseError(std::string("member '") + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

double read_real(const json& obj, const char* key) {
    const json& v = member(obj, key);
    if (!v.is_number()) throw ParseError(std::string("member '") + key + "' must be a number");
    return v.get<double>();
}

json parse_object(std::string_view text, const char* what) {
    json doc = json::parse(text.begin(), text.end(), nullptr, false);
    if (doc.is_discarded()) throw ParseError(std::string(what) + " is not valid JSON");
    if (!doc.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
    return doc;
}

}  // namespace

std::string trace_to_document(const RunTrace& trace, bool include_timing) {
    std::string out;
    out += fmt::format("{{\n  \"n_cities\": {},\n", trace.n_cities);
    out += fmt::format("  \"best_fitness\": {:.9f},\n", trace.best_fitness);
    out += fmt::format("  \"best_generation\": {},\n", trace.best_generation);
    out += fmt::format("  \"final_generation\": {},\n", trace.final_generation);
    out += fmt::format("  \"last_seed\": {},\n", trace.last_seed);
    if (include_timing) out += fmt::format("  \"elapsed_ms\": {:.6f},\n", trace.elapsed_ms);
    out += "  \"per_generation\": [";
    for (std::size_t i = 0; i < trace.per_generation.size(); ++i) {
        const auto& g = trace.per_generation[i];
        out += fmt::format(
            "{}\n    {{\"generation\": {}, \"population_best\": {:.9f}, \"best_so_far\": {:.9f}, "
            "\"seed\": {}}}",
            i ? "," : "", g.generation, g.population_best, g.best_so_far, g.seed);
    }
    out += trace.per_generation.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

RunTrace trace_from_document(std::string_view text) {
    const json doc = parse_object(text, "trace document");
    RunTrace t;
    t.n_cities = read_unsigned(doc, "n_cities");
    t.best_fitness = read_real(doc, "best_fitness");
    t.best_generation = read_unsigned(doc, "best_generation");
    t.final_generation = read_unsigned(doc, "final_generation");
    t.last_seed = read_unsigned(doc, "last_seed");
    if (doc.contains("elapsed_ms")) t.elapsed_ms = read_real(doc, "elapsed_ms");

    const json& gens = member(doc, "per_generation");
    if (!gens.is_array()) throw ParseError("member 'per_generation' must be an array");
    t.per_generation.reserve(gens.size());
    for (const json& g : gens) {
        if (!g.is_object()) throw ParseError("per_generation entries must be objects");
        t.per_generation.push_back({read_unsigned(g, "generation"), read_real(g, "population_best"),
                                    read_real(g, "best_so_far"), read_unsigned(g, "seed")});
    }
    return t;
}

std::string config_to_document(const GAConfig& c) {
    const json doc = {{"population_size", c.population_size},
                      {"max_generations", c.max_generations},
                      {"crossover_rate", c.crossover_rate},
                      {"mutation_rate", c.mutation_rate},
                      {"stagnation_limit", c.stagnation_limit},
                      {"seed", c.seed}};
    return doc.dump(2) + "\n";
}

GAConfig config_from_document(std::string_view text) {
    const json doc = parse_object(text, "config document");
    GAConfig c;
    for (const auto& [key, value] : doc.items()) {
        if (key == "population_size") c.population_size = read_unsigned(doc, "population_size");
        else if (key == "max_generations") c.max_generations = read_unsigned(doc, "max_generations");
        else if (key == "crossover_rate") c.crossover_rate = read_real(doc, "crossover_rate");
        else if (key == "mutation_rate") c.mutation_rate = read_real(doc, "mutation_rate");
        else if (key == "stagnation_limit") c.stagnation_limit = read_unsigned(doc, "stagnation_limit");
        else if (key == "seed") c.seed = read_unsigned(doc, "seed");
        else throw ParseError("unknown config key '" + key + "'");
    }
    try {
        c.validate();
    } catch (const ConfigError& e) {
        throw ParseError(std::string("invalid config: ") + e.what());
    }
    return c;
}

}  // namespace tspga
