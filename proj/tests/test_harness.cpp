#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "tspga/error.hpp"
#include "tspga/harness.hpp"
#include "tspga/report.hpp"

using namespace tspga;

namespace {

CityList fixture(std::size_t n = 10) { return load_cities(TSPGA_CITIES).prefix(n); }

RunTrace trace_for(std::size_t n, std::uint64_t seed) {
    GAConfig cfg;
    cfg.seed = seed;
    return run(fixture(n), cfg);
}

SubjectSpec cpp_subject() { return SubjectSpec::external("cpp", TSPGA_SUBJECT); }

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("compare_traces") {
    const RunTrace t = trace_for(6, 2);
    CHECK(compare_traces(t, t).equal);

    RunTrace off = t;
    off.best_fitness += 1e-3;
    auto v = compare_traces(t, off);
    CHECK_FALSE(v.equal);
    CHECK(v.field == "best_fitness");
    CHECK(compare_traces(off, t).equal == v.equal);

    RunTrace tiny = t;
    tiny.best_fitness += 4e-10;
    CHECK(compare_traces(t, tiny).equal);

    RunTrace gen = t;
    gen.per_generation[3].seed += 1;
    v = compare_traces(t, gen);
    CHECK(v.field == "per_generation.seed");
    REQUIRE(v.generation.has_value());
    CHECK(*v.generation == 3);

    RunTrace timing = t;
    timing.elapsed_ms += 100.0;
    CHECK(compare_traces(t, timing).equal);

    RunTrace shorter = t;
    shorter.per_generation.pop_back();
    CHECK(compare_traces(t, shorter).field == "per_generation");

    CHECK(compare_traces(t, trace_for(7, 2)).field == "n_cities");
    CHECK_FALSE(compare_traces(t, trace_for(6, 3)).equal);
}

TEST_CASE("external subject over the wire protocol matches the engine") {
    const auto c = fixture(7);
    GAConfig cfg;
    cfg.seed = 3;
    const RunTrace external = run_subject(cpp_subject(), c, cfg);
    const RunTrace internal = run(c, cfg);
    const auto v = compare_traces(internal, external);
    CHECK_MESSAGE(v.equal, v.field << ": " << v.detail);
    CHECK(external.elapsed_ms > 0.0);
}

TEST_CASE("launch templates") {
    const auto c = fixture(5);
    const auto spec = SubjectSpec::external("tmpl", std::string(TSPGA_SUBJECT) + " {cities} {config}");
    CHECK(compare_traces(run(c, {}), run_subject(spec, c, {})).equal);
}

TEST_CASE("failing subjects") {
    const auto c = fixture(5);
    CHECK_THROWS_AS(run_subject(SubjectSpec::external("false", "false"), c, {}), SubjectError);
    CHECK_THROWS_AS(run_subject(SubjectSpec::external("garbage", "echo nonsense; true"), c, {}), SubjectError);
    CHECK_THROWS_AS(run_subject(SubjectSpec::external("missing", "/nonexistent/subject"), c, {}), SubjectError);
    // Valid document for the wrong instance size.
    const std::string wrong_n =
        R"(echo '{"n_cities": 2, "best_fitness": 1, "best_generation": 0, "final_generation": 0, "last_seed": 0, "per_generation": []}'; true)";
    CHECK_THROWS_AS(run_subject(SubjectSpec::external("wrong", wrong_n), c, {}), SubjectError);
}

TEST_CASE("parse_subject_flag") {
    auto s = parse_subject_flag("py=python3 subject.py", "subject1");
    CHECK(s.id == "py");
    CHECK(s.launch == "python3 subject.py");
    CHECK(s.kind == SubjectKind::external);
    s = parse_subject_flag("python3 subject.py --opt=1", "subject2");
    CHECK(s.id == "subject2");
    CHECK(s.launch == "python3 subject.py --opt=1");
}

TEST_CASE("time_subject") {
    const auto c = fixture(5);
    SUBCASE("one repetition") {
        const auto r = time_subject(SubjectSpec::in_process(), c, {}, 1);
        CHECK(r.samples_ms.size() == 1);
    }
    SUBCASE("ten repetitions agree") {
        const auto r = time_subject(SubjectSpec::in_process(), c, {}, 10);
        CHECK(r.samples_ms.size() == 10);
        for (double ms : r.samples_ms) CHECK(ms > 0.0);
        CHECK(r.trace.last_seed == run(c, {}).last_seed);
    }
    SUBCASE("errors name the repetition") {
        try {
            time_subject(SubjectSpec::external("false", "false"), c, {}, 3);
            FAIL("expected SubjectError");
        } catch (const SubjectError& e) {
            CHECK(std::string(e.what()).find("repetition 0") != std::string::npos);
        }
        CHECK_THROWS_AS(time_subject(SubjectSpec::in_process(), c, {}, 0), std::invalid_argument);
    }
}

TEST_CASE("bench") {
    const auto c = fixture();
    SUBCASE("single subject, two sizes") {
        const std::vector<SubjectSpec> subjects{SubjectSpec::in_process()};
        const std::vector<std::size_t> ns{5, 6};
        const auto report = bench(subjects, c, ns, {}, 3, "engine");
        REQUIRE(report.rows.size() == 2);
        CHECK(report.rows[0].n_cities == 5);
        CHECK_FALSE(report.rows[0].perf_over_baseline_percent.has_value());
        CHECK(report.regressions.empty());
        CHECK(report.warmup_runs == 1);
        CHECK(report.rows[0].stats.sample_count == 3);
    }
    SUBCASE("two conformant subjects share results") {
        const std::vector<SubjectSpec> subjects{SubjectSpec::in_process(), cpp_subject()};
        const std::vector<std::size_t> ns{5, 6, 7};
        const auto report = bench(subjects, c, ns, {}, 2, "engine");
        REQUIRE(report.rows.size() == 6);
        for (std::size_t i = 0; i < report.rows.size(); i += 2) {
            CHECK(std::fabs(report.rows[i].best_fitness - report.rows[i + 1].best_fitness) <= kTraceTolerance);
            CHECK(report.rows[i].last_seed == report.rows[i + 1].last_seed);
            CHECK(report.rows[i].best_generation == report.rows[i + 1].best_generation);
            CHECK_FALSE(report.rows[i].perf_over_baseline_percent.has_value());
            CHECK(report.rows[i + 1].perf_over_baseline_percent.has_value());
        }
        CHECK(report.regressions.size() == 2);
    }
    SUBCASE("nonconformant subject aborts") {
        // A subject that runs a different seed than it was asked for.
        const std::string liar = std::string("sed 's/\"seed\": [0-9]*/\"seed\": 99/' {config} > {config}.x && ") +
                                 TSPGA_SUBJECT + " {cities} {config}.x";
        const std::vector<SubjectSpec> subjects{SubjectSpec::in_process(), SubjectSpec::external("liar", liar)};
        const std::vector<std::size_t> ns{6};
        CHECK_THROWS_AS(bench(subjects, c, ns, {}, 1, "engine"), ConformanceError);
    }
    SUBCASE("unknown baseline or duplicate ids") {
        const std::vector<SubjectSpec> one{SubjectSpec::in_process()};
        const std::vector<SubjectSpec> dup{SubjectSpec::in_process(), SubjectSpec::in_process()};
        const std::vector<std::size_t> ns{5};
        CHECK_THROWS_AS(bench(one, c, ns, {}, 1, "python"), std::invalid_argument);
        CHECK_THROWS_AS(bench(dup, c, ns, {}, 1, "engine"), std::invalid_argument);
    }
}

TEST_CASE("render_report") {
    BenchReport empty;
    empty.baseline_subject = "engine";
    CHECK(count_lines(render_report(empty, ReportFormat::table)) == 1);
    CHECK(count_lines(render_report(empty, ReportFormat::csv)) == 1);
    CHECK(render_report(empty, ReportFormat::structured).find("\"rows\": []") != std::string::npos);

    BenchReport one = empty;
    BenchRow row;
    row.subject_id = "engine";
    row.n_cities = 5;
    row.stats = {43.004, 41.836, 42.354, 0.371, 0.876, 10};
    row.best_generation = 11;
    row.last_seed = 2516;
    row.best_fitness = 30.30547;
    one.rows.push_back(row);

    const std::string csv = render_report(one, ReportFormat::csv);
    CHECK(count_lines(csv) == 2);
    CHECK(csv.substr(csv.find('\n') + 1) == "5,engine,43.00,41.84,42.35,0.37,0.88,11,2516,30.305,-\n");

    const std::string table = render_report(one, ReportFormat::table);
    CHECK(count_lines(table) == 2);
    CHECK(table.find("30.305") != std::string::npos);
    CHECK(table.back() == '\n');
    const auto last_line = table.substr(table.rfind('\n', table.size() - 2) + 1);
    CHECK(last_line.find(" -\n") != std::string::npos);

    const std::string js = render_report(one, ReportFormat::structured);
    CHECK(js.find("\"perf_over_baseline_percent\": null") != std::string::npos);
    CHECK(js.find("\"mean_ms\": 42.35") != std::string::npos);

    const PlotData plot = plot_data(one);
    CHECK(plot.time_vs_n == "subject,n,mean_ms\nengine,5,42.354000\n");
    CHECK(plot.fitness_vs_n == "n,best_fitness\n5,30.305470000\n");

    CHECK(parse_report_format("csv") == ReportFormat::csv);
    CHECK_THROWS_AS(parse_report_format("xml"), std::invalid_argument);
}

TEST_CASE("verify_conformance") {
    const auto c = fixture();
    const std::vector<std::size_t> ns{5, 8};
    const std::vector<std::uint64_t> seeds{1, 2};
    const std::vector<SubjectSpec> good{cpp_subject()};
    const auto ok = verify_conformance(good, c, ns, seeds, {});
    CHECK(ok.cases.size() == 4);
    CHECK(ok.conformant());
    CHECK(render_conformance(ok).find("CONFORMANT") != std::string::npos);

    const std::vector<SubjectSpec> bad{cpp_subject(), SubjectSpec::external("broken", "false")};
    const auto nok = verify_conformance(bad, c, ns, seeds, {});
    CHECK_FALSE(nok.conformant());
    CHECK(render_conformance(nok).find("NOT CONFORMANT") != std::string::npos);
}
