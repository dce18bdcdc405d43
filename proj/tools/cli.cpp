#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "tspga/brute_force.hpp"
#include "tspga/city.hpp"
#include "tspga/engine.hpp"
#include "tspga/error.hpp"
#include "tspga/harness.hpp"
#include "tspga/report.hpp"
#include "tspga/trace_io.hpp"

namespace tspga::cli {
namespace {

std::uint64_t parse_uint(std::string_view s) {
    std::uint64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc{} || ptr != end)
        throw std::invalid_argument("'" + std::string(s) + "' is not a non-negative integer");
    return v;
}

std::vector<std::uint64_t> parse_list(std::string_view text) {
    std::vector<std::uint64_t> out;
    if (const auto dots = text.find(".."); dots != std::string_view::npos) {
        const auto lo = parse_uint(text.substr(0, dots));
        const auto hi = parse_uint(text.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
        if (hi - lo > 1'000'000) throw std::invalid_argument("range '" + std::string(text) + "' is too large");
        for (auto v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_uint(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

struct Options {
    std::string cities = "data/cities.csv";
    std::string config_path;
    std::string n_text;
    std::uint64_t seed = 0;
    std::string seeds_text = "1,2,3";
    GAConfig ga;
    std::size_t reps = 10;
    std::vector<std::string> subjects;
    std::string baseline = "engine";
    std::string format = "table";
    std::string out_path;
    bool timing = false;
};

void add_ga_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--config", o.config_path, "Run configuration document (JSON); flags override it");
    cmd->add_option("--seed", o.seed, "Initial PRNG seed")->capture_default_str();
    cmd->add_option("--pop", o.ga.population_size, "Population size")->capture_default_str();
    cmd->add_option("--max-gen", o.ga.max_generations, "Maximum generations")->capture_default_str();
    cmd->add_option("--cx-rate", o.ga.crossover_rate, "Crossover rate")->capture_default_str();
    cmd->add_option("--mut-rate", o.ga.mutation_rate, "Mutation rate")->capture_default_str();
    cmd->add_option("--stagnation", o.ga.stagnation_limit, "Generations without improvement before stopping")
        ->capture_default_str();
}

GAConfig resolve_config(const CLI::App* cmd, const Options& o) {
    GAConfig c = o.ga;
    c.seed = o.seed;
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open config file " + o.config_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        GAConfig file = config_from_document(ss.str());
        if (cmd->count("--seed")) file.seed = o.seed;
        if (cmd->count("--pop")) file.population_size = o.ga.population_size;
        if (cmd->count("--max-gen")) file.max_generations = o.ga.max_generations;
        if (cmd->count("--cx-rate")) file.crossover_rate = o.ga.crossover_rate;
        if (cmd->count("--mut-rate")) file.mutation_rate = o.ga.mutation_rate;
        if (cmd->count("--stagnation")) file.stagnation_limit = o.ga.stagnation_limit;
        c = file;
    }
    c.validate();
    return c;
}

CityList select_cities(const Options& o) {
    CityList all = load_cities(o.cities);
    if (o.n_text.empty()) return all;
    const auto n = parse_n_values(o.n_text);
    if (n.size() != 1) throw std::invalid_argument("--n must be a single city count here");
    if (n[0] > all.size())
        throw std::invalid_argument(fmt::format("--n {} exceeds the {} cities in {}", n[0], all.size(), o.cities));
    return all.prefix(n[0]);
}

std::vector<std::size_t> n_grid(const Options& o, std::size_t available) {
    auto ns = parse_n_values(o.n_text.empty() ? "5..10" : o.n_text);
    for (auto n : ns)
        if (n > available)
            throw std::invalid_argument(fmt::format("--n {} exceeds the {} cities available", n, available));
    return ns;
}

std::string order_names(const Order& order, const CityList& cities) {
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out += " -> ";
        out += cities[order[i]].name;
    }
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) throw std::runtime_error("cannot write " + path);
}

int cmd_solve(const CLI::App* cmd, const Options& o, std::ostream& out, std::ostream& err) {
    const CityList cities = select_cities(o);
    const GAConfig config = resolve_config(cmd, o);
    const RunTrace trace = run(cities, config);
    out << trace_to_document(trace, o.timing);
    err << fmt::format("best route: {}\nelapsed: {:.3f} ms\n", order_names(trace.best_order, cities),
                       trace.elapsed_ms);
    return kExitOk;
}

int cmd_brute(const Options& o, std::ostream& out) {
    const CityList cities = select_cities(o);
    const Route best = brute_force_optimum(cities);
    out << fmt::format("length: {:.9f}\n", best.length);
    out << "order:";
    for (auto i : best.order) out << ' ' << i;
    out << "\nroute: " << order_names(best.order, cities) << '\n';
    return kExitOk;
}

std::vector<SubjectSpec> external_subjects(const Options& o) {
    std::vector<SubjectSpec> subjects;
    for (std::size_t i = 0; i < o.subjects.size(); ++i)
        subjects.push_back(parse_subject_flag(o.subjects[i], fmt::format("subject{}", i + 1)));
    return subjects;
}

int cmd_bench(const CLI::App* cmd, const Options& o, std::ostream& out, std::ostream& err) {
    const CityList cities = load_cities(o.cities);
    const GAConfig config = resolve_config(cmd, o);
    const auto ns = n_grid(o, cities.size());
    const ReportFormat format = parse_report_format(o.format);

    std::vector<SubjectSpec> subjects{SubjectSpec::in_process("engine")};
    for (auto& s : external_subjects(o)) subjects.push_back(std::move(s));

    BenchReport report;
    try {
        report = bench(subjects, cities, ns, config, o.reps, o.baseline);
    } catch (const ConformanceError& e) {
        err << "conformance failure: " << e.what() << '\n';
        return kExitFailure;
    }

    const std::string doc = render_report(report, format);
    if (o.out_path.empty()) {
        out << doc;
        return kExitOk;
    }
    namespace fs = std::filesystem;
    const fs::path dir(o.out_path);
    fs::create_directories(dir);
    const char* ext = format == ReportFormat::table ? "txt" : format == ReportFormat::csv ? "csv" : "json";
    const PlotData plot = plot_data(report);
    write_text((dir / fmt::format("report.{}", ext)).string(), doc);
    write_text((dir / "time_vs_n.csv").string(), plot.time_vs_n);
    write_text((dir / "fitness_vs_n.csv").string(), plot.fitness_vs_n);
    out << fmt::format("wrote report.{}, time_vs_n.csv, fitness_vs_n.csv to {}\n", ext, dir.string());
    return kExitOk;
}

int cmd_verify(const CLI::App* cmd, const Options& o, std::ostream& out) {
    const CityList cities = load_cities(o.cities);
    const GAConfig config = resolve_config(cmd, o);
    const auto ns = n_grid(o, cities.size());
    const auto seeds = parse_seed_list(o.seeds_text);
    const auto subjects = external_subjects(o);
    const ConformanceReport report = verify_conformance(subjects, cities, ns, seeds, config);
    out << render_conformance(report);
    return report.conformant() ? kExitOk : kExitFailure;
}

}  // namespace

std::vector<std::size_t> parse_n_values(std::string_view text) {
    std::vector<std::size_t> out;
    for (auto v : parse_list(text)) {
        if (v == 0) throw std::invalid_argument("city counts must be positive");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) { return parse_list(text); }

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deterministic GA solver and benchmark harness for small TSP instances", "tspga"};
    app.require_subcommand(1, 1);
    Options o;

    auto* solve = app.add_subcommand("solve", "Run the GA and print the run trace");
    auto* brute = app.add_subcommand("brute", "Print the exact optimum by enumeration (n <= 12)");
    auto* benchc = app.add_subcommand("bench", "Time repeated runs and print a measurement report");
    auto* verify = app.add_subcommand("verify", "Compare external subjects against the engine over an n/seed grid");

    for (auto* cmd : {solve, brute, benchc, verify}) {
        cmd->add_option("--cities", o.cities, "City CSV (name,x,y per line)")->capture_default_str();
    }
    solve->add_option("--n", o.n_text, "Use the first N cities");
    brute->add_option("--n", o.n_text, "Use the first N cities");
    benchc->add_option("--n", o.n_text, "City counts, e.g. 5..10 or 5,7 (default 5..10)");
    verify->add_option("--n", o.n_text, "City counts, e.g. 5..10 (default 5..10)");
    for (auto* cmd : {solve, benchc, verify}) add_ga_flags(cmd, o);

    solve->add_flag("--timing", o.timing, "Include elapsed_ms in the trace document");
    benchc->add_option("--reps", o.reps, "Timed repetitions per subject and n")->capture_default_str()
        ->check(CLI::PositiveNumber);
    for (auto* cmd : {benchc, verify})
        cmd->add_option("--subject", o.subjects, "External subject: [ID=]COMMAND (repeatable)");
    verify->get_option("--subject")->required();
    benchc->add_option("--baseline", o.baseline, "Baseline subject id")->capture_default_str();
    benchc->add_option("--format", o.format, "table | csv | structured")
        ->capture_default_str()
        ->check(CLI::IsMember({"table", "csv", "structured"}));
    benchc->add_option("--out", o.out_path, "Directory for the report and plot-data CSVs");
    verify->add_option("--seeds", o.seeds_text, "Seeds, e.g. 1,2,3 or 0..9")->capture_default_str();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*solve) return cmd_solve(solve, o, out, err);
        if (*brute) return cmd_brute(o, out);
        if (*benchc) return cmd_bench(benchc, o, out, err);
        return cmd_verify(verify, o, out);
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitFailure;
}

}  // namespace tspga::cli
