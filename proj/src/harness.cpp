#include "tspga/harness.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <fmt/format.h>

#include "tspga/error.hpp"
#include "tspga/trace_io.hpp"

namespace tspga {
namespace fs = std::filesystem;
namespace {

class TempDir {
public:
    TempDir() {
        std::string pattern = (fs::temp_directory_path() / "tspga-XXXXXX").string();
        if (!::mkdtemp(pattern.data())) throw SubjectError("cannot create temporary directory");
        path_ = pattern;
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }

    const fs::path& path() const noexcept { return path_; }

private:
    fs::path path_;
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw SubjectError("cannot write " + path.string());
}

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += "'\\''";
        else out += c;
    }
    return out + "'";
}

std::string expand_launch(const std::string& launch, const std::string& cities, const std::string& config) {
    const bool templated = launch.find("{cities}") != std::string::npos ||
                           launch.find("{config}") != std::string::npos;
    if (!templated) return launch + " " + cities + " " + config;
    std::string cmd = launch;
    for (auto [key, value] : {std::pair<std::string, const std::string&>{"{cities}", cities},
                              std::pair<std::string, const std::string&>{"{config}", config}}) {
        for (auto pos = cmd.find(key); pos != std::string::npos; pos = cmd.find(key, pos + value.size()))
            cmd.replace(pos, key.size(), value);
    }
    return cmd;
}

RunTrace run_external(const SubjectSpec& subject, const CityList& cities, const GAConfig& config) {
    TempDir dir;
    const auto cities_path = dir.path() / "cities.csv";
    const auto config_path = dir.path() / "config.json";
    write_file(cities_path, to_csv(cities));
    write_file(config_path, config_to_document(config));

    const std::string cmd =
        expand_launch(subject.launch, shell_quote(cities_path.string()), shell_quote(config_path.string()));
    std::FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) throw SubjectError("subject '" + subject.id + "': cannot launch '" + cmd + "'");
    std::string output;
    std::array<char, 4096> buf{};
    for (std::size_t got; (got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) output.append(buf.data(), got);
    const int status = ::pclose(pipe);
    if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0)
        throw SubjectError(fmt::format("subject '{}' failed (status {})", subject.id,
                                       WIFEXITED(status) ? WEXITSTATUS(status) : status));

    RunTrace trace;
    try {
        trace = trace_from_document(output);
    } catch (const ParseError& e) {
        throw SubjectError("subject '" + subject.id + "' violated the trace protocol: " + e.what());
    }
    if (trace.n_cities != cities.size())
        throw SubjectError(fmt::format("subject '{}' reported n_cities {} for {} cities", subject.id,
                                       trace.n_cities, cities.size()));
    return trace;
}

bool near(double a, double b) { return std::fabs(a - b) <= kTraceTolerance; }

TraceVerdict mismatch(std::string field, std::string detail, std::optional<std::size_t> gen = {}) {
    return TraceVerdict{false, std::move(field), gen, std::move(detail)};
}

}  // namespace

SubjectSpec SubjectSpec::in_process(std::string id) {
    return SubjectSpec{std::move(id), SubjectKind::in_process, {}};
}

SubjectSpec SubjectSpec::external(std::string id, std::string launch) {
    return SubjectSpec{std::move(id), SubjectKind::external, std::move(launch)};
}

SubjectSpec parse_subject_flag(const std::string& value, const std::string& fallback_id) {
    const auto eq = value.find('=');
    if (eq != std::string::npos && eq > 0) {
        const std::string id = value.substr(0, eq);
        const bool plain = std::all_of(id.begin(), id.end(), [](unsigned char c) {
            return std::isalnum(c) || c == '_' || c == '-' || c == '.';
        });
        if (plain) return SubjectSpec::external(id, value.substr(eq + 1));
    }
    return SubjectSpec::external(fallback_id, value);
}

RunTrace run_subject(const SubjectSpec& subject, const CityList& cities, const GAConfig& config) {
    if (subject.kind == SubjectKind::in_process) return run(cities, config);
    return run_external(subject, cities, config);
}

TraceVerdict compare_traces(const RunTrace& a, const RunTrace& b) {
    if (a.n_cities != b.n_cities)
        return mismatch("n_cities", fmt::format("{} vs {}", a.n_cities, b.n_cities));

    const std::size_t common = std::min(a.per_generation.size(), b.per_generation.size());
    for (std::size_t i = 0; i < common; ++i) {
        const auto& x = a.per_generation[i];
        const auto& y = b.per_generation[i];
        if (x.generation != y.generation)
            return mismatch("per_generation.generation", fmt::format("{} vs {}", x.generation, y.generation), i);
        if (!near(x.population_best, y.population_best))
            return mismatch("per_generation.population_best",
                            fmt::format("{:.9f} vs {:.9f}", x.population_best, y.population_best), x.generation);
        if (!near(x.best_so_far, y.best_so_far))
            return mismatch("per_generation.best_so_far",
                            fmt::format("{:.9f} vs {:.9f}", x.best_so_far, y.best_so_far), x.generation);
        if (x.seed != y.seed)
            return mismatch("per_generation.seed", fmt::format("{} vs {}", x.seed, y.seed), x.generation);
    }
    if (a.per_generation.size() != b.per_generation.size())
        return mismatch("per_generation", fmt::format("{} vs {} entries", a.per_generation.size(),
                                                      b.per_generation.size()),
                        common);

    if (!near(a.best_fitness, b.best_fitness))
        return mismatch("best_fitness", fmt::format("{:.9f} vs {:.9f}", a.best_fitness, b.best_fitness));
    if (a.best_generation != b.best_generation)
        return mismatch("best_generation", fmt::format("{} vs {}", a.best_generation, b.best_generation));
    if (a.final_generation != b.final_generation)
        return mismatch("final_generation", fmt::format("{} vs {}", a.final_generation, b.final_generation));
    if (a.last_seed != b.last_seed)
        return mismatch("last_seed", fmt::format("{} vs {}", a.last_seed, b.last_seed));
    return {};
}

TimingResult time_subject(const SubjectSpec& subject, const CityList& cities, const GAConfig& config,
                          std::size_t repetitions) {
    if (repetitions < 1) throw std::invalid_argument("time_subject needs at least one repetition");
    auto attempt = [&](std::size_t rep) {
        try {
            return run_subject(subject, cities, config);
        } catch (const std::exception& e) {
            throw SubjectError(fmt::format("subject '{}' repetition {}: {}", subject.id, rep, e.what()));
        }
    };

    (void)attempt(0);  // warm-up, untimed

    TimingResult result;
    result.samples_ms.reserve(repetitions);
    for (std::size_t rep = 1; rep <= repetitions; ++rep) {
        RunTrace trace = attempt(rep);
        result.samples_ms.push_back(trace.elapsed_ms);
        if (rep == 1) {
            result.trace = std::move(trace);
            continue;
        }
        if (auto v = compare_traces(result.trace, trace); !v)
            throw SubjectError(fmt::format("subject '{}' repetition {} diverged from repetition 1 at {}: {}",
                                           subject.id, rep, v.field, v.detail));
    }
    return result;
}

BenchReport bench(std::span<const SubjectSpec> subjects, const CityList& cities,
                  std::span<const std::size_t> n_values, const GAConfig& config, std::size_t repetitions,
                  const std::string& baseline_id) {
    const bool has_baseline =
        std::any_of(subjects.begin(), subjects.end(), [&](const SubjectSpec& s) { return s.id == baseline_id; });
    if (!has_baseline) throw std::invalid_argument("baseline subject '" + baseline_id + "' is not registered");
    for (std::size_t i = 0; i < subjects.size(); ++i)
        for (std::size_t j = i + 1; j < subjects.size(); ++j)
            if (subjects[i].id == subjects[j].id)
                throw std::invalid_argument("duplicate subject id '" + subjects[i].id + "'");

    BenchReport report;
    report.baseline_subject = baseline_id;
    report.repetitions = repetitions;

    for (std::size_t n : n_values) {
        const CityList prefix = cities.prefix(n);
        const std::size_t first_row = report.rows.size();
        RunTrace reference;
        for (std::size_t s = 0; s < subjects.size(); ++s) {
            TimingResult timed = time_subject(subjects[s], prefix, config, repetitions);
            if (s == 0) {
                reference = timed.trace;
            } else if (auto v = compare_traces(reference, timed.trace); !v) {
                throw ConformanceError(fmt::format(
                    "n={} seed={}: subject '{}' disagrees with '{}' at {}{}: {}", n, config.seed, subjects[s].id,
                    subjects[0].id, v.field, v.generation ? fmt::format(" (generation {})", *v.generation) : "",
                    v.detail));
            }
            BenchRow row;
            row.subject_id = subjects[s].id;
            row.n_cities = n;
            row.stats = timed.samples_ms.size() >= 2
                            ? summarize(timed.samples_ms)
                            : SummaryStats{timed.samples_ms[0], timed.samples_ms[0], timed.samples_ms[0], 0.0, 0.0, 1};
            row.best_generation = timed.trace.best_generation;
            row.last_seed = timed.trace.last_seed;
            row.best_fitness = timed.trace.best_fitness;
            report.rows.push_back(std::move(row));
        }

        const auto begin = report.rows.begin() + static_cast<std::ptrdiff_t>(first_row);
        const auto base = std::find_if(begin, report.rows.end(),
                                       [&](const BenchRow& r) { return r.subject_id == baseline_id; });
        for (auto it = begin; it != report.rows.end(); ++it)
            if (it != base && base->stats.mean_ms > 0.0)
                it->perf_over_baseline_percent = perf_over_baseline(base->stats.mean_ms, it->stats.mean_ms);
    }

    for (const auto& subject : subjects) {
        std::vector<double> xs, ys;
        for (const auto& row : report.rows)
            if (row.subject_id == subject.id) {
                xs.push_back(static_cast<double>(row.n_cities));
                ys.push_back(row.stats.mean_ms);
            }
        const bool distinct_xs = std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) != xs.end();
        if (xs.size() >= 3 && distinct_xs) report.regressions.push_back({subject.id, linregress(xs, ys)});
    }
    return report;
}

bool ConformanceReport::conformant() const noexcept {
    return std::all_of(cases.begin(), cases.end(), [](const ConformanceCase& c) { return c.verdict.equal; });
}

ConformanceReport verify_conformance(std::span<const SubjectSpec> subjects, const CityList& cities,
                                     std::span<const std::size_t> n_values, std::span<const std::uint64_t> seeds,
                                     const GAConfig& config) {
    ConformanceReport report;
    for (std::size_t n : n_values) {
        const CityList prefix = cities.prefix(n);
        for (std::uint64_t seed : seeds) {
            GAConfig local = config;
            local.seed = seed;
            const RunTrace reference = run(prefix, local);
            for (const auto& subject : subjects) {
                ConformanceCase c{subject.id, n, seed, {}};
                try {
                    c.verdict = compare_traces(reference, run_subject(subject, prefix, local));
                } catch (const std::exception& e) {
                    c.verdict = mismatch("subject", e.what());
                }
                report.cases.push_back(std::move(c));
            }
        }
    }
    return report;
}

}  // namespace tspga
