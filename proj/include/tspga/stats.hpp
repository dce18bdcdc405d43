#pragma once

#include <cstddef>
#include <span>

namespace tspga {

struct SummaryStats {
    double max_ms = 0.0;
    double min_ms = 0.0;
    double mean_ms = 0.0;
    double stddev_ms = 0.0;  // sample standard deviation, divisor n-1
    double cv_percent = 0.0;
    std::size_t sample_count = 0;
};

/// Throws std::invalid_argument for fewer than two samples.
SummaryStats summarize(std::span<const double> samples_ms);

/// stddev / mean * 100; 0 when mean is 0.
double coefficient_of_variation(double stddev, double mean) noexcept;

/// (base - subject) / base * 100. Positive means faster than the baseline.
/// Throws std::invalid_argument when base_mean <= 0.
double perf_over_baseline(double base_mean, double subject_mean);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r = 0.0;
    double r_squared = 0.0;
};

/// Ordinary least squares with Pearson r. Constant ys give slope 0 and r 0.
/// Throws std::invalid_argument for fewer than 3 points, mismatched sizes or
/// constant xs.
LinearFit linregress(std::span<const double> xs, std::span<const double> ys);

}  // namespace tspga
