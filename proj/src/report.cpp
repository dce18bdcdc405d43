#include "tspga/report.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace tspga {
namespace {

struct Cells {
    std::string n, subject, max, min, mean, stddev, cv, best_gen, last_seed, fitness, perf;
};

Cells cells(const BenchRow& r) {
    return Cells{fmt::format("{}", r.n_cities),
                 r.subject_id,
                 fmt::format("{:.2f}", r.stats.max_ms),
                 fmt::format("{:.2f}", r.stats.min_ms),
                 fmt::format("{:.2f}", r.stats.mean_ms),
                 fmt::format("{:.2f}", r.stats.stddev_ms),
                 fmt::format("{:.2f}", r.stats.cv_percent),
                 fmt::format("{}", r.best_generation),
                 fmt::format("{}", r.last_seed),
                 fmt::format("{:.3f}", r.best_fitness),
                 r.perf_over_baseline_percent ? fmt::format("{:.2f}", *r.perf_over_baseline_percent) : "-"};
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) out += fmt::format("\\u{:04x}", c);
                else out += c;
        }
    }
    return out + "\"";
}

std::string render_table(const BenchReport& report) {
    const std::vector<std::string> header{"Cities",  "Subject",    "Max (ms)",  "Min (ms)",
                                          "Avg (ms)", "Std Dev",   "CV (%)",    "Best Gen",
                                          "Last Seed", "Best Fitness",
                                          "Perf over " + report.baseline_subject + " (%)"};
    std::vector<std::vector<std::string>> body;
    for (const auto& r : report.rows) {
        const Cells c = cells(r);
        body.push_back({c.n, c.subject, c.max, c.min, c.mean, c.stddev, c.cv, c.best_gen, c.last_seed,
                        c.fitness, c.perf});
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
        width[i] = header[i].size();
        for (const auto& row : body) width[i] = std::max(width[i], row[i].size());
    }
    auto line = [&](const std::vector<std::string>& row) {
        std::string out;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += "  ";
            // Name column left-aligned, numbers right-aligned.
            out += i == 1 ? fmt::format("{:<{}}", row[i], width[i]) : fmt::format("{:>{}}", row[i], width[i]);
        }
        return out + "\n";
    };
    std::string out = line(header);
    for (const auto& row : body) out += line(row);
    for (const auto& reg : report.regressions)
        out += fmt::format("# {} time vs n: slope {:.6f} ms/city, intercept {:.6f}, r {:.4f}, r^2 {:.4f}\n",
                           reg.subject_id, reg.time_vs_n.slope, reg.time_vs_n.intercept, reg.time_vs_n.r,
                           reg.time_vs_n.r_squared);
    return out;
}

std::string render_csv(const BenchReport& report) {
    std::string out =
        "n_cities,subject,max_ms,min_ms,mean_ms,stddev_ms,cv_percent,best_generation,last_seed,best_fitness,"
        "perf_over_baseline_percent\n";
    for (const auto& r : report.rows) {
        const Cells c = cells(r);
        out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", c.n, c.subject, c.max, c.min, c.mean, c.stddev,
                           c.cv, c.best_gen, c.last_seed, c.fitness, c.perf);
    }
    return out;
}

std::string render_structured(const BenchReport& report) {
    std::string out = fmt::format("{{\n  \"baseline_subject\": {},\n  \"repetitions\": {},\n  \"warmup_runs\": {},\n",
                                  json_string(report.baseline_subject), report.repetitions, report.warmup_runs);
    out += "  \"rows\": [";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const Cells c = cells(report.rows[i]);
        out += fmt::format(
            "{}\n    {{\"n_cities\": {}, \"subject\": {}, \"max_ms\": {}, \"min_ms\": {}, \"mean_ms\": {}, "
            "\"stddev_ms\": {}, \"cv_percent\": {}, \"best_generation\": {}, \"last_seed\": {}, "
            "\"best_fitness\": {}, \"perf_over_baseline_percent\": {}}}",
            i ? "," : "", c.n, json_string(c.subject), c.max, c.min, c.mean, c.stddev, c.cv, c.best_gen,
            c.last_seed, c.fitness, c.perf == "-" ? "null" : c.perf);
    }
    out += report.rows.empty() ? "],\n" : "\n  ],\n";
    out += "  \"regressions\": [";
    for (std::size_t i = 0; i < report.regressions.size(); ++i) {
        const auto& reg = report.regressions[i];
        out += fmt::format("{}\n    {{\"subject\": {}, \"slope\": {:.6f}, \"intercept\": {:.6f}, \"r\": {:.6f}, "
                           "\"r_squared\": {:.6f}}}",
                           i ? "," : "", json_string(reg.subject_id), reg.time_vs_n.slope, reg.time_vs_n.intercept,
                           reg.time_vs_n.r, reg.time_vs_n.r_squared);
    }
    out += report.regressions.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
    if (name == "table") return ReportFormat::table;
    if (name == "csv") return ReportFormat::csv;
    if (name == "structured") return ReportFormat::structured;
    throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

std::string render_report(const BenchReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::table: return render_table(report);
        case ReportFormat::csv: return render_csv(report);
        case ReportFormat::structured: return render_structured(report);
    }
    throw std::invalid_argument("unknown report format");
}

PlotData plot_data(const BenchReport& report) {
    PlotData plot{"subject,n,mean_ms\n", "n,best_fitness\n"};
    std::vector<std::size_t> seen;
    for (const auto& r : report.rows) {
        plot.time_vs_n += fmt::format("{},{},{:.6f}\n", r.subject_id, r.n_cities, r.stats.mean_ms);
        if (std::find(seen.begin(), seen.end(), r.n_cities) == seen.end()) {
            seen.push_back(r.n_cities);
            plot.fitness_vs_n += fmt::format("{},{:.9f}\n", r.n_cities, r.best_fitness);
        }
    }
    return plot;
}

std::string render_conformance(const ConformanceReport& report) {
    std::string out;
    for (const auto& c : report.cases) {
        if (c.verdict.equal) {
            out += fmt::format("equal     subject={} n={} seed={}\n", c.subject_id, c.n_cities, c.seed);
        } else {
            out += fmt::format("MISMATCH  subject={} n={} seed={} field={}{} {}\n", c.subject_id, c.n_cities,
                               c.seed, c.verdict.field,
                               c.verdict.generation ? fmt::format(" generation={}", *c.verdict.generation) : "",
                               c.verdict.detail);
        }
    }
    out += report.conformant() ? "CONFORMANT\n" : "NOT CONFORMANT\n";
    return out;
}

}  // namespace tspga
