#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tspga/city.hpp"
#include "tspga/engine.hpp"
#include "tspga/stats.hpp"

namespace tspga {

enum class SubjectKind { in_process, external };

/// A GA implementation under test. External subjects are launched through
/// the shell as `launch` with the cities CSV path and config document path
/// appended (or substituted for `{cities}` / `{config}` when present), and
/// must print one trace document on stdout.
struct SubjectSpec {
    std::string id;
    SubjectKind kind = SubjectKind::in_process;
    std::string launch;

    static SubjectSpec in_process(std::string id = "engine");
    static SubjectSpec external(std::string id, std::string launch);
};

/// Parses a --subject flag value: `ID=COMMAND`, or a bare command whose id
/// becomes `fallback_id`.
SubjectSpec parse_subject_flag(const std::string& value, const std::string& fallback_id);

/// Runs a subject once. Throws SubjectError on crash, nonzero exit or an
/// unparsable trace.
RunTrace run_subject(const SubjectSpec& subject, const CityList& cities, const GAConfig& config);

struct TraceVerdict {
    bool equal = true;
    std::string field;                      // first field that differs
    std::optional<std::size_t> generation;  // set for per-generation mismatches
    std::string detail;

    explicit operator bool() const noexcept { return equal; }
};

inline constexpr double kTraceTolerance = 1e-9;

/// Compares every deterministic field; elapsed_ms is ignored. Integer
/// fields must match exactly, lengths within kTraceTolerance.
TraceVerdict compare_traces(const RunTrace& a, const RunTrace& b);

struct TimingResult {
    std::vector<double> samples_ms;
    RunTrace trace;
};

/// One untimed warm-up run, then `repetitions` sequential runs. Samples are
/// the subject's self-reported elapsed_ms. Throws SubjectError naming the
/// repetition that failed or diverged from the first.
TimingResult time_subject(const SubjectSpec& subject, const CityList& cities,
                          const GAConfig& config, std::size_t repetitions);

struct BenchRow {
    std::string subject_id;
    std::size_t n_cities = 0;
    SummaryStats stats;
    std::size_t best_generation = 0;
    std::uint64_t last_seed = 0;
    double best_fitness = 0.0;
    std::optional<double> perf_over_baseline_percent;  // empty on baseline rows
};

struct SubjectRegression {
    std::string subject_id;
    LinearFit time_vs_n;
};

struct BenchReport {
    std::string baseline_subject;
    std::vector<BenchRow> rows;
    std::vector<SubjectRegression> regressions;
    std::size_t repetitions = 0;
    std::size_t warmup_runs = 1;
};

/// Times every subject on each city-list prefix in `n_values`. Traces of
/// all subjects for one n must agree, otherwise ConformanceError. The time
/// regression per subject needs at least three distinct n and is skipped
/// otherwise. Throws std::invalid_argument if the baseline id is unknown.
BenchReport bench(std::span<const SubjectSpec> subjects, const CityList& cities,
                  std::span<const std::size_t> n_values, const GAConfig& config,
                  std::size_t repetitions, const std::string& baseline_id);

struct ConformanceCase {
    std::string subject_id;
    std::size_t n_cities = 0;
    std::uint64_t seed = 0;
    TraceVerdict verdict;
};

struct ConformanceReport {
    std::vector<ConformanceCase> cases;

    bool conformant() const noexcept;
};

/// Runs the in-process engine as the reference and each subject over the
/// (n, seed) grid. Subject failures are recorded as non-equal verdicts.
ConformanceReport verify_conformance(std::span<const SubjectSpec> subjects,
                                     const CityList& cities,
                                     std::span<const std::size_t> n_values,
                                     std::span<const std::uint64_t> seeds,
                                     const GAConfig& config);

}  // namespace tspga
