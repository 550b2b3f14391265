#include "remnet/localization.hpp"

#include <cmath>
#include <stdexcept>

namespace remnet {

PositionSet report_positions(const PositionSet& truth,
                             const LocalizationModel& model,
                             std::mt19937_64& rng) {
    if (model.sigma_m < 0.0) {
        throw std::invalid_argument("localization sigma must be non-negative");
    }
    if (model.sigma_m == 0.0) {
        return truth;
    }
    const double axis_sigma =
        model.per_axis_sigma ? model.sigma_m : model.sigma_m / std::sqrt(2.0);
    std::normal_distribution<double> noise(0.0, axis_sigma);
    PositionSet reported;
    reported.reserve(truth.size());
    for (const Position& p : truth) {
        const double dx = noise(rng);
        const double dy = noise(rng);
        reported.push_back({p.x + dx, p.y + dy});
    }
    return reported;
}

} // namespace remnet
