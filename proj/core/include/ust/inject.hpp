#pragma once

#include <cstdint>
#include <random>

#include "ust/dataset.hpp"
#include "ust/uncertain.hpp"

namespace ust {

// Calibrated synthetic uncertainty: level c scales per-timestep noise
// drawn from the column's own spread. Deterministic for a fixed seed.
struct InjectionConfig {
    double c = 0.0;
    std::uint64_t seed = 0;
};

// Deterministic standard-normal stream: Box-Muller over mt19937_64, one
// draw per call, fully specified so injected datasets are reproducible
// across platforms (std::normal_distribution is not).
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}
    double next();

private:
    double next_uniform();  // in (0, 1]
    std::mt19937_64 rng_;
};

// For each observation, row-major: draw sigma ~ N(0, col_std), set the
// recorded deviation s = c * |sigma|, then perturb the best guess by
// e ~ N(0, s). Column standard deviations are population statistics of
// the given split.
UncertainDataset inject_uncertainty(const RawDataset& dataset, const InjectionConfig& config);

}  // namespace ust
