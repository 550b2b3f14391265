#include "remnet/power.hpp"

#include <cmath>
#include <stdexcept>

namespace remnet {

double dbm_to_watts(double dbm) noexcept {
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double watts_to_dbm(double watts) {
    if (watts <= 0.0) {
        throw std::invalid_argument("watts must be positive for dBm conversion");
    }
    return 10.0 * std::log10(watts) + 30.0;
}

double effective_transmitted_power(const BsPowerProfile& profile, const PowerParams& params) {
    if (params.amplifier_efficiency <= 0.0) {
        throw std::invalid_argument("amplifier efficiency must be positive");
    }
    return profile.tx_power_w / params.amplifier_efficiency;
}

double transceiver_chain_power(const BsPowerProfile& profile, const PowerParams& params) noexcept {
    return static_cast<double>(profile.antenna_count) * params.per_antenna_power_w +
           params.oscillator_power_w;
}

double bs_total_power(const BsPowerProfile& profile, const PowerParams& params, bool active) {
    if (!active) {
        return params.standby_power_w;
    }
    return effective_transmitted_power(profile, params) +
           transceiver_chain_power(profile, params) + params.fixed_power_w;
}

double network_power(std::span<const BsPowerProfile> profiles,
                     const PowerParams& params,
                     const Action& action) {
    if (profiles.size() != static_cast<std::size_t>(action.pbs_count()) + 1) {
        throw std::invalid_argument("profile count does not match action PBS count + 1");
    }
    double total = bs_total_power(profiles[0], params, true); // macro, always on
    for (int b = 0; b < action.pbs_count(); ++b) {
        total += bs_total_power(profiles[static_cast<std::size_t>(b) + 1], params,
                                action.pbs_active(b));
    }
    return total;
}

double energy_efficiency(double median_bitrate_bps, double avg_power_w) {
    if (!(avg_power_w > 0.0)) {
        throw std::invalid_argument("average power must be positive");
    }
    return median_bitrate_bps / avg_power_w;
}

} // namespace remnet
