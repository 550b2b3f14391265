#pragma once

#include <random>

#include "remnet/geometry.hpp"

namespace remnet {

// Gaussian position-reporting error. `sigma_m` is the total 2-D RMS error
// by default (per-axis deviation sigma/sqrt(2)); set `per_axis_sigma` to
// interpret it as the deviation of each axis instead.
struct LocalizationModel {
    double sigma_m = 0.0;
    bool per_axis_sigma = false;
};

// Adds an independent zero-mean Gaussian offset to every point. Errors are
// redrawn on every call; cardinality is preserved.
PositionSet report_positions(const PositionSet& truth,
                             const LocalizationModel& model,
                             std::mt19937_64& rng);

} // namespace remnet
