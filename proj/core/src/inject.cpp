#include "ust/inject.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ust {

double NormalSampler::next_uniform() {
    // 53-bit mantissa, shifted into (0, 1].
    return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1p-53;
}

double NormalSampler::next() {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

UncertainDataset inject_uncertainty(const RawDataset& dataset, const InjectionConfig& config) {
    if (!std::isfinite(config.c) || config.c < 0.0) {
        throw std::invalid_argument("inject_uncertainty: uncertainty level must be finite and >= 0");
    }
    if (dataset.series.empty()) {
        throw std::invalid_argument("inject_uncertainty: empty dataset");
    }
    const std::size_t n = dataset.size();
    const std::size_t m = dataset.length();

    // Population std of each timestep column.
    std::vector<double> col_std(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double mean = 0.0;
        for (const auto& row : dataset.series) mean += row[i];
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (const auto& row : dataset.series) {
            const double gap = row[i] - mean;
            var += gap * gap;
        }
        col_std[i] = std::sqrt(var / static_cast<double>(n));
    }

    NormalSampler normal(config.seed);
    std::vector<UncertainSeries> series;
    series.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<UncertainValue> values;
        values.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            const double sigma = col_std[i] * normal.next();
            const double scale = config.c * std::abs(sigma);
            const double noise = scale * normal.next();
            values.emplace_back(dataset.series[r][i] + noise, scale);
        }
        series.emplace_back(std::move(values));
    }
    return {std::move(series), dataset.labels};
}

}  // namespace ust
