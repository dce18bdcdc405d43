#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tspga/error.hpp"
#include "tspga/trace_io.hpp"

using namespace tspga;

namespace {

RunTrace sample() {
    RunTrace t;
    t.n_cities = 3;
    t.per_generation = {{0, 12.0, 12.0, 2}, {1, 11.5, 11.5, 40}};
    t.best_fitness = 11.5;
    t.best_generation = 1;
    t.final_generation = 1;
    t.last_seed = 40;
    t.elapsed_ms = 0.25;
    return t;
}

}  // namespace

TEST_CASE("trace document layout") {
    const std::string doc = trace_to_document(sample());
    CHECK(doc ==
          "{\n"
          "  \"n_cities\": 3,\n"
          "  \"best_fitness\": 11.500000000,\n"
          "  \"best_generation\": 1,\n"
          "  \"final_generation\": 1,\n"
          "  \"last_seed\": 40,\n"
          "  \"elapsed_ms\": 0.250000,\n"
          "  \"per_generation\": [\n"
          "    {\"generation\": 0, \"population_best\": 12.000000000, \"best_so_far\": 12.000000000, \"seed\": 2},\n"
          "    {\"generation\": 1, \"population_best\": 11.500000000, \"best_so_far\": 11.500000000, \"seed\": 40}\n"
          "  ]\n"
          "}\n");
    CHECK(trace_to_document(sample(), false).find("elapsed_ms") == std::string::npos);
}

TEST_CASE("best_fitness is written with nine decimals") {
    RunTrace t = sample();
    t.best_fitness = 30.3054725378773;
    CHECK(trace_to_document(t).find("\"best_fitness\": 30.305472538,") != std::string::npos);
}

TEST_CASE("trace round trip stays within serialization precision") {
    RunTrace t = sample();
    t.best_fitness = 38.89661980013456;
    t.per_generation[1].population_best = 1.0 / 3.0;
    t.last_seed = UINT64_MAX;
    const RunTrace back = trace_from_document(trace_to_document(t));
    CHECK(back.n_cities == t.n_cities);
    CHECK(std::fabs(back.best_fitness - t.best_fitness) <= 5e-10);
    CHECK(std::fabs(back.per_generation[1].population_best - 1.0 / 3.0) <= 5e-10);
    CHECK(back.last_seed == UINT64_MAX);
    CHECK(back.elapsed_ms == 0.25);
    // Re-serializing the parsed trace is a fixed point.
    CHECK(trace_to_document(back) == trace_to_document(t));
}

TEST_CASE("malformed trace documents") {
    CHECK_THROWS_AS(trace_from_document("not json"), ParseError);
    CHECK_THROWS_AS(trace_from_document("[1,2]"), ParseError);
    CHECK_THROWS_AS(trace_from_document(R"({"n_cities": 3})"), ParseError);
    CHECK_THROWS_AS(trace_from_document(R"({"n_cities": -3, "best_fitness": 1, "best_generation": 0,
        "final_generation": 0, "last_seed": 0, "per_generation": []})"),
                    ParseError);
    CHECK_THROWS_AS(trace_from_document(R"({"n_cities": 3, "best_fitness": "x", "best_generation": 0,
        "final_generation": 0, "last_seed": 0, "per_generation": []})"),
                    ParseError);
    CHECK_NOTHROW(trace_from_document(R"({"n_cities": 3, "best_fitness": 1, "best_generation": 0,
        "final_generation": 0, "last_seed": 0, "per_generation": []})"));
}

TEST_CASE("config documents") {
    GAConfig c;
    c.population_size = 7;
    c.crossover_rate = 0.5;
    c.seed = 99;
    CHECK(config_from_document(config_to_document(c)) == c);
    CHECK(config_from_document("{}") == GAConfig{});
    CHECK(config_from_document(R"({"seed": 3})").seed == 3);
    CHECK_THROWS_AS(config_from_document(R"({"sead": 3})"), ParseError);
    CHECK_THROWS_AS(config_from_document(R"({"population_size": 1})"), ParseError);
    CHECK_THROWS_AS(config_from_document(R"({"mutation_rate": 2})"), ParseError);
    CHECK_THROWS_AS(config_from_document(R"({"seed": -1})"), ParseError);
}
