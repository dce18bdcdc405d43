#pragma once

#include <string>
#include <string_view>

#include "tspga/harness.hpp"

namespace tspga {

enum class ReportFormat { table, csv, structured };

/// Throws std::invalid_argument for anything but table, csv, structured.
ReportFormat parse_report_format(std::string_view name);

/// Columns follow the classic measurement table: cities, subject, max, min,
/// average, standard deviation, CV, best generation, last seed, best
/// fitness, performance over baseline. Times use 2 decimals, fitness 3, and
/// the baseline's performance cell is "-".
std::string render_report(const BenchReport& report, ReportFormat format);

struct PlotData {
    std::string time_vs_n;     // subject,n,mean_ms
    std::string fitness_vs_n;  // n,best_fitness
};

PlotData plot_data(const BenchReport& report);

std::string render_conformance(const ConformanceReport& report);

}  // namespace tspga
