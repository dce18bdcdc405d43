#include "tspga/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tspga {

SummaryStats summarize(std::span<const double> samples) {
    if (samples.size() < 2) throw std::invalid_argument("summarize needs at least 2 samples");
    const double count = static_cast<double>(samples.size());
    SummaryStats s;
    s.sample_count = samples.size();
    const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
    s.min_ms = *lo;
    s.max_ms = *hi;
    s.mean_ms = std::accumulate(samples.begin(), samples.end(), 0.0) / count;
    double ss = 0.0;
    for (double v : samples) ss += (v - s.mean_ms) * (v - s.mean_ms);
    s.stddev_ms = std::sqrt(ss / (count - 1.0));
    // Rounding in the mean can leave it a hair outside [min, max].
    s.mean_ms = std::clamp(s.mean_ms, s.min_ms, s.max_ms);
    s.cv_percent = coefficient_of_variation(s.stddev_ms, s.mean_ms);
    return s;
}

double coefficient_of_variation(double stddev, double mean) noexcept {
    return mean == 0.0 ? 0.0 : stddev / mean * 100.0;
}

double perf_over_baseline(double base_mean, double subject_mean) {
    if (!(base_mean > 0.0)) throw std::invalid_argument("baseline mean must be positive");
    return (base_mean - subject_mean) / base_mean * 100.0;
}

LinearFit linregress(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("linregress: xs and ys differ in size");
    if (xs.size() < 3) throw std::invalid_argument("linregress needs at least 3 points");
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0) throw std::invalid_argument("linregress: xs are all equal");

    LinearFit fit;
    if (syy == 0.0) {
        fit.intercept = my;
        return fit;
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    fit.r_squared = fit.r * fit.r;
    return fit;
}

}  // namespace tspga
